#include "qtc/bounds.hpp"

#include <sstream>
#include <string>

namespace qtc {

namespace {

unsigned long long pow_u(unsigned q, unsigned t) {
    unsigned long long r = 1;
    while (t--) r *= q;
    return r;
}

}  // namespace

unsigned griesmer_n(unsigned k, unsigned d, unsigned q) {
    if (k < 1 || d < 1 || q < 2) throw BadInput("griesmer_n requires k,d >= 1 and q >= 2");
    unsigned long long sum = 0;
    unsigned long long qj = 1;
    for (unsigned j = 0; j < k; ++j) {
        sum += (d + qj - 1) / qj;
        qj *= q;
    }
    return unsigned(sum);
}

unsigned gap(unsigned i, unsigned t, unsigned q) {
    if (t < 2 || q < 2 || i < 1 || i > pow_u(q, t - 1))
        throw BadInput("gap requires t > 1, q >= 2 and i in [1, q^{t-1}]");
    unsigned long long sum = 0;
    unsigned long long qj = 1;
    for (unsigned j = 1; j <= t; ++j) {
        sum += (i + qj - 1) / qj;
        qj *= q;
    }
    return unsigned(sum - t);
}

Theorem5Params decompose_p(unsigned p, unsigned q, unsigned t) {
    unsigned long long qt = pow_u(q, t);
    if (p < 2 || p > qt + 1)
        throw OutOfRange("p must be in [2, q^t + 1], got " + std::to_string(p));
    // i*q = q^t + 1 - p + r with r in [1, q]: exactly one multiple of q
    // lies in that length-q window
    unsigned long long s = qt + 1 - p;
    unsigned i = unsigned(s / q + 1);
    unsigned r = unsigned(i * (unsigned long long)q - s);
    return {q, t, p, i, r};
}

std::pair<GriesmerReport, Theorem5Params> theorem5_report(unsigned q, unsigned t, unsigned p) {
    Theorem5Params tp = decompose_p(p, q, t);
    unsigned m = unsigned((pow_u(q, t) - 1) / (q - 1));
    unsigned n = p * m;
    unsigned d = (p - 1) * unsigned(pow_u(q, t - 1));
    unsigned k = 2 * t;
    unsigned gb = griesmer_n(k, d, q);
    unsigned g = gap(tp.i, t, q);
    if (n - gb != g)
        throw GapMismatch("Griesmer slack " + std::to_string(n - gb) +
                          " does not match gap " + std::to_string(g));
    return {{n, k, d, q, gb, int(n) - int(gb), n == gb}, tp};
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (unsigned p = 17; p <= 28; ++p) {
        auto [rep, tp] = theorem5_report(3, 3, p);
        rows.push_back({p, rep.d, rep.n, rep.griesmer_n, gap(tp.i, 3, 3), tp.i, tp.r, 3});
    }
    return rows;
}

std::string table1_csv() {
    std::ostringstream os;
    os << "p,d,n,gb,gap,i,r,q\n";
    for (const auto& r : table1())
        os << r.p << ',' << r.d << ',' << r.n << ',' << r.gb << ',' << r.gap << ','
           << r.i << ',' << r.r << ',' << r.q << '\n';
    return os.str();
}

bool paper_claims_d_optimal(unsigned q, unsigned t, unsigned p) {
    // ranges published for this family; the single codes [195,8,96],
    // [210,8,104], [240,8,120] and [36,4,24]_3 fall inside them
    if (q == 2 && t == 3) return p >= 3 && p <= 8;
    if (q == 2 && t == 4) return p >= 10 && p <= 16;
    if (q == 3 && t == 2) return p >= 3 && p <= 9;
    if (q == 4 && t == 2) return p >= 7 && p <= 16;
    if (q == 5 && t == 2) return p >= 13 && p <= 25;
    return false;
}

OptimalityFlags classify(unsigned q, unsigned t, unsigned p, unsigned n, unsigned k,
                         unsigned d) {
    unsigned gb = griesmer_n(k, d, q);
    return {n == gb, int(n) - int(gb), paper_claims_d_optimal(q, t, p)};
}

}  // namespace qtc
