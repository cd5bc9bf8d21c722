#ifndef QTC_BOUNDS_HPP
#define QTC_BOUNDS_HPP

#include <vector>

#include "qtc/errors.hpp"

namespace qtc {

struct GriesmerReport {
    unsigned n, k, d, q;
    unsigned griesmer_n;  // sum of ceilings
    int slack;            // n - griesmer_n
    bool meets_bound;     // slack == 0, i.e. length-optimal
};

/// Decomposition p = q^t - i*q + r + 1 with i in [1, q^{t-1}], r in [1, q];
/// unique for every p in [2, q^t + 1].
struct Theorem5Params {
    unsigned q, t, p;
    unsigned i, r;
};

/// The Griesmer length bound: sum_{j=0}^{k-1} ceil(d / q^j).
unsigned griesmer_n(unsigned k, unsigned d, unsigned q);

/// gap(i, t, q) = sum_{j=1}^{t} ceil(i / q^{j-1}) - t.
unsigned gap(unsigned i, unsigned t, unsigned q);

Theorem5Params decompose_p(unsigned p, unsigned q, unsigned t);

/// Computes n = p*(q^t-1)/(q-1), d = (p-1)*q^{t-1}, k = 2t, and checks the
/// Griesmer slack against gap(i, t, q). Throws GapMismatch on disagreement.
std::pair<GriesmerReport, Theorem5Params> theorem5_report(unsigned q, unsigned t, unsigned p);

struct Table1Row {
    unsigned p, d, n, gb, gap, i, r, q;
};

/// Rows for q = 3, t = 3, p = 17..28.
std::vector<Table1Row> table1();

/// CSV with header "p,d,n,gb,gap,i,r,q".
std::string table1_csv();

struct OptimalityFlags {
    bool meets_griesmer;  // implies length-optimal
    int griesmer_slack;
    bool paper_d_optimal;  // metadata transcribed from published tables, not recomputed
};

OptimalityFlags classify(unsigned q, unsigned t, unsigned p, unsigned n, unsigned k, unsigned d);

/// Static metadata: distance optimality claimed in published tables for
/// the (q, t, p) ranges of this family. Never computed here.
bool paper_claims_d_optimal(unsigned q, unsigned t, unsigned p);

}  // namespace qtc

#endif
