#include "qtc/analyze.hpp"

#include <algorithm>
#include <set>

namespace qtc {

namespace {

unsigned long long code_size(const LinearCode& c) {
    unsigned long long total = 1;
    for (unsigned i = 0; i < c.k; ++i) total *= c.field.q();
    return total;
}

void check_cap(const LinearCode& c, unsigned long long cap) {
    unsigned long long total = 1;
    for (unsigned i = 0; i < c.k; ++i) {
        total *= c.field.q();
        if (total > cap)
            throw TooLarge("codebook size q^k exceeds the enumeration cap", total);
    }
}

unsigned weight_of(const std::vector<unsigned>& w) {
    unsigned wt = 0;
    for (unsigned x : w) wt += (x != 0);
    return wt;
}

}  // namespace

LinearCode make_linear_code(Matrix generator) {
    Field f = generator.field();
    Echelon red = row_reduce(generator);
    // the reduction must span the same code as the input rows
    for (std::size_t r = 0; r < generator.n_rows(); ++r)
        if (!in_row_space(red, generator.row(r)))
            throw Error("row reduction lost a generator row (internal bug)");
    unsigned n = unsigned(generator.n_cols());
    unsigned k = unsigned(red.pivots.size());
    return {std::move(f), std::move(generator), n, k, std::move(red)};
}

void for_each_codeword(const LinearCode& c,
                       const std::function<void(const std::vector<unsigned>&)>& f,
                       unsigned long long cap) {
    check_cap(c, cap);
    const Field& fld = c.field;
    unsigned q = fld.q();
    const Matrix& gen = c.reduced.mat;
    std::vector<unsigned> msg(c.k, 0), word(c.n, 0);
    f(word);
    unsigned long long total = code_size(c);
    for (unsigned long long it = 1; it < total; ++it) {
        std::size_t pos = 0;
        while (true) {
            unsigned old = msg[pos];
            unsigned next = (old + 1) % q;
            msg[pos] = next;
            unsigned delta = fld.sub(next, old);
            for (unsigned j = 0; j < c.n; ++j)
                word[j] = fld.add(word[j], fld.mul(delta, gen.at(pos, j)));
            if (next != 0) break;
            ++pos;
        }
        f(word);
    }
}

WeightDistribution weight_distribution(const LinearCode& c, unsigned long long cap) {
    WeightDistribution wd{{}, code_size(c)};
    for_each_codeword(c, [&](const std::vector<unsigned>& w) { ++wd.counts[weight_of(w)]; },
                      cap);
    return wd;
}

unsigned min_distance(const LinearCode& c, unsigned long long cap) {
    if (c.k == 0) throw ZeroDimensional("minimum distance of the zero code is undefined");
    unsigned best = c.n + 1;
    for_each_codeword(c, [&](const std::vector<unsigned>& w) {
        unsigned wt = weight_of(w);
        if (wt != 0 && wt < best) best = wt;
    }, cap);
    return best;
}

std::optional<std::pair<unsigned, unsigned>> is_two_weight(const LinearCode& c,
                                                           unsigned long long cap) {
    auto wd = weight_distribution(c, cap);
    std::vector<unsigned> ws;
    for (const auto& [w, cnt] : wd.counts)
        if (w != 0) ws.push_back(w);
    if (ws.size() != 2) return std::nullopt;
    return std::make_pair(ws[0], ws[1]);
}

std::optional<unsigned> is_equidistant(const LinearCode& c, unsigned long long cap) {
    auto wd = weight_distribution(c, cap);
    std::vector<unsigned> ws;
    for (const auto& [w, cnt] : wd.counts)
        if (w != 0) ws.push_back(w);
    if (ws.size() != 1) return std::nullopt;
    return ws[0];
}

bool is_projective(const LinearCode& c) {
    if (c.k == 0) throw ZeroDimensional("projectivity of the zero code is undefined");
    const Field& f = c.field;
    const Matrix& gen = c.reduced.mat;
    std::set<std::vector<unsigned>> seen;
    for (unsigned col = 0; col < c.n; ++col) {
        std::vector<unsigned> v(c.k);
        for (unsigned r = 0; r < c.k; ++r) v[r] = gen.at(r, col);
        auto first = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
        if (first == v.end()) return false;  // zero column
        unsigned s = f.inv(*first);
        for (auto& x : v) x = f.mul(x, s);
        if (!seen.insert(std::move(v)).second) return false;  // scalar multiple
    }
    return true;
}

bool qt_closure(const LinearCode& c, unsigned P, unsigned lambda, bool interleaved,
                unsigned long long cap) {
    if (P == 0 || c.n % P != 0) throw BadGeometry("length not divisible by block count");
    std::size_t m = c.n / P;
    bool ok = true;
    for_each_codeword(c, [&](const std::vector<unsigned>& w) {
        if (!ok) return;
        std::vector<unsigned> shifted;
        if (interleaved) {
            shifted = twist_shift(c.field, w, P, lambda);
        } else {
            shifted.resize(c.n);
            for (unsigned b = 0; b < P; ++b) {
                std::vector<unsigned> block(w.begin() + std::size_t(b) * m,
                                            w.begin() + std::size_t(b + 1) * m);
                block = twist_shift(c.field, std::move(block), 1, lambda);
                std::copy(block.begin(), block.end(), shifted.begin() + std::size_t(b) * m);
            }
        }
        if (!in_row_space(c.reduced, shifted)) ok = false;
    }, cap);
    return ok;
}

}  // namespace qtc
