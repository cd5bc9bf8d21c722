#ifndef QTC_RECORD_HPP
#define QTC_RECORD_HPP

#include <string>

#include "qtc/analyze.hpp"
#include "qtc/bounds.hpp"
#include "qtc/qtconstruct.hpp"

namespace qtc {

/// One catalog row. Every field is re-derivable from (q, t, p); w1, w2
/// and d are taken from exhaustive enumeration and cross-checked against
/// the closed-form values before a record is handed out.
struct CodeRecord {
    unsigned q = 0, t = 0, p = 0, n = 0, k = 0;
    unsigned lambda = 0;
    unsigned w1 = 0, w2 = 0, d = 0;  // w1 == w2 == d for the p = q^t + 1 simplex row
    unsigned griesmer_n = 0, gap = 0, i = 0, r = 0;
    bool length_optimal = false;
    bool paper_d_optimal = false;
    std::vector<unsigned> h_coeffs, g_coeffs;
};

/// Builds the record for a constructed code, verifying d, w1, w2 by full
/// enumeration. Throws Error if the enumerated weights disagree with the
/// closed-form parameters, TooLarge past the cap.
CodeRecord make_record(const AnyQTCode& code,
                       unsigned long long cap = kEnumerationCap);

std::string record_csv_header();
std::string record_csv_line(const CodeRecord& rec);

/// Full JSON serialization of a constructed code: the record fields plus
/// selection (coefficient vectors) and the block-form generator rows.
std::string code_to_json(const AnyQTCode& code, const CodeRecord& rec);

/// A code parsed back from the JSON form; meta fields are optional.
struct ParsedCode {
    Matrix generator;
    std::optional<unsigned> t, p, lambda;
};

ParsedCode code_from_json(const std::string& text);  // throws ParseError

}  // namespace qtc

#endif
