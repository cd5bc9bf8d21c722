#include "qtc/record.hpp"

#include <sstream>

#include <json.hpp>

namespace qtc {

namespace {

using nlohmann::json;

unsigned pow_u(unsigned q, unsigned t) {
    unsigned r = 1;
    while (t--) r *= q;
    return r;
}

}  // namespace

CodeRecord make_record(const AnyQTCode& code, unsigned long long cap) {
    const SimplexCode& base = base_of(code);
    unsigned q = base.field.q();
    CodeRecord rec;
    rec.q = q;
    rec.t = base.t;
    rec.lambda = base.lambda;
    rec.h_coeffs = base.h.coeffs();
    rec.g_coeffs = base.g.coeffs();

    LinearCode lc = make_linear_code(generator_of(code));
    rec.n = lc.n;
    rec.k = lc.k;

    auto wd = weight_distribution(lc, cap);
    std::vector<unsigned> ws;
    for (const auto& [w, cnt] : wd.counts)
        if (w != 0) ws.push_back(w);

    if (std::holds_alternative<QTTwoWeightCode>(code)) {
        const auto& tw = std::get<QTTwoWeightCode>(code);
        rec.p = tw.p;
        if (ws.size() != 2 || ws[0] != tw.w1 || ws[1] != tw.w2)
            throw Error("enumerated weights disagree with the two-weight parameters");
        rec.w1 = ws[0];
        rec.w2 = ws[1];
        rec.d = ws[0];
    } else {
        rec.p = pow_u(q, base.t) + 1;
        const auto& sx = std::get<QTSimplexCode>(code);
        if (ws.size() != 1 || ws[0] != sx.d)
            throw Error("enumerated weights disagree with the simplex parameters");
        rec.w1 = rec.w2 = rec.d = ws[0];
    }

    auto tp = decompose_p(rec.p, q, rec.t);
    rec.griesmer_n = griesmer_n(rec.k, rec.d, q);
    rec.gap = gap(tp.i, rec.t, q);
    rec.i = tp.i;
    rec.r = tp.r;
    rec.length_optimal = rec.n == rec.griesmer_n;
    rec.paper_d_optimal = paper_claims_d_optimal(q, rec.t, rec.p);
    return rec;
}

std::string record_csv_header() {
    return "q,t,p,n,k,lambda,w1,w2,d,griesmer_n,gap,i,r,length_optimal,paper_d_optimal";
}

std::string record_csv_line(const CodeRecord& r) {
    std::ostringstream os;
    os << r.q << ',' << r.t << ',' << r.p << ',' << r.n << ',' << r.k << ',' << r.lambda
       << ',' << r.w1 << ',' << r.w2 << ',' << r.d << ',' << r.griesmer_n << ',' << r.gap
       << ',' << r.i << ',' << r.r << ',' << (r.length_optimal ? 1 : 0) << ','
       << (r.paper_d_optimal ? 1 : 0);
    return os.str();
}

std::string code_to_json(const AnyQTCode& code, const CodeRecord& rec) {
    const Matrix& gen = generator_of(code);
    json j;
    j["q"] = rec.q;
    j["t"] = rec.t;
    j["p"] = rec.p;
    j["lambda"] = rec.lambda;
    j["h_coeffs"] = rec.h_coeffs;
    j["g_coeffs"] = rec.g_coeffs;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["w1"] = rec.w1;
    j["w2"] = rec.w2;
    j["d"] = rec.d;
    j["griesmer_n"] = rec.griesmer_n;
    j["gap"] = rec.gap;
    j["i"] = rec.i;
    j["r"] = rec.r;
    j["length_optimal"] = rec.length_optimal;
    j["paper_d_optimal"] = rec.paper_d_optimal;

    json sel = json::array();
    if (std::holds_alternative<QTTwoWeightCode>(code))
        for (const auto& s : std::get<QTTwoWeightCode>(code).selection)
            sel.push_back(s.defining_poly.coeffs());
    j["selection"] = sel;

    json rows = json::array();
    for (std::size_t r = 0; r < gen.n_rows(); ++r) rows.push_back(gen.row(r));
    j["generator"] = rows;
    return j.dump(2);
}

ParsedCode code_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        unsigned q = j.at("q").get<unsigned>();
        Field f = make_field(q);
        const auto& rows = j.at("generator");
        if (!rows.is_array() || rows.empty()) throw ParseError("generator must be a nonempty array");
        std::size_t n_cols = rows[0].size();
        Matrix gen(f, rows.size(), n_cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != n_cols) throw ParseError("ragged generator rows");
            for (std::size_t c = 0; c < n_cols; ++c) {
                unsigned v = rows[r][c].get<unsigned>();
                if (v >= q) throw ParseError("generator entry out of range");
                gen.at(r, c) = v;
            }
        }
        ParsedCode pc{std::move(gen), {}, {}, {}};
        if (j.contains("t")) pc.t = j["t"].get<unsigned>();
        if (j.contains("p")) pc.p = j["p"].get<unsigned>();
        if (j.contains("lambda")) pc.lambda = j["lambda"].get<unsigned>();
        return pc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad code record: ") + e.what());
    }
}

}  // namespace qtc
