#include "qtc/qtconstruct.hpp"

#include <algorithm>

namespace qtc {

namespace {

unsigned pow_u(unsigned q, unsigned t) {
    unsigned r = 1;
    while (t--) r *= q;
    return r;
}

void place_block(Matrix& dst, std::size_t row0, std::size_t col0, const Matrix& block) {
    for (std::size_t r = 0; r < block.n_rows(); ++r)
        for (std::size_t c = 0; c < block.n_cols(); ++c)
            dst.at(row0 + r, col0 + c) = block.at(r, c);
}

}  // namespace

std::vector<TwistulantSpec> select_B(const SimplexCode& base, unsigned p) {
    unsigned qt = pow_u(base.field.q(), base.t);
    if (p < 2 || p > qt) throw BadP("p must be in [2, q^t], got " + std::to_string(p));
    auto polys = codeword_polys(base);
    std::vector<TwistulantSpec> out;
    out.reserve(p - 1);
    for (unsigned i = 0; i < p - 1; ++i) out.emplace_back(polys[i], base.ring);
    return out;
}

QTTwoWeightCode build_two_weight(const Field& f, unsigned t, unsigned p,
                                 std::optional<Polynomial> h,
                                 std::optional<std::vector<Polynomial>> selection) {
    unsigned q = f.q();
    unsigned qt = pow_u(q, t);
    if (p < 2 || p > qt) throw BadP("p must be in [2, q^t], got " + std::to_string(p));

    SimplexCode base = build_simplex(f, t, std::move(h));

    std::vector<TwistulantSpec> sel;
    if (selection) {
        if (selection->size() != p - 1)
            throw BadInput("selection must contain exactly p-1 polynomials");
        auto polys = codeword_polys(base);
        for (const auto& s : *selection) {
            Polynomial red = reduce_mod(s, base.ring);
            if (std::find(polys.begin(), polys.end(), red) == polys.end())
                throw NotCodeword("selection entry is not a simplex codeword: " + poly_to_text(s));
            TwistulantSpec spec(red, base.ring);
            if (std::find(sel.begin(), sel.end(), spec) != sel.end())
                throw DuplicateSelection("selection entries must be pairwise distinct");
            sel.push_back(std::move(spec));
        }
    } else {
        sel = select_B(base, p);
    }

    unsigned m = base.m;
    Matrix gen(f, 2 * std::size_t(m), std::size_t(p) * m);
    Matrix gt = materialize(TwistulantSpec(base.g, base.ring));
    for (unsigned b = 0; b < p; ++b) place_block(gen, 0, std::size_t(b) * m, gt);
    for (unsigned b = 1; b < p; ++b)
        place_block(gen, m, std::size_t(b) * m, materialize(sel[b - 1]));

    if (rank(gen) != 2 * t) throw Error("generator rank is not 2t (broken construction)");

    unsigned w = pow_u(q, t - 1);
    return {std::move(base), p, std::move(sel), std::move(gen),
            p * m, 2 * t, (p - 1) * w, p * w};
}

QTSimplexCode build_simplex_2t(const Field& f, unsigned t, std::optional<Polynomial> h) {
    unsigned q = f.q();
    unsigned p = pow_u(q, t);
    SimplexCode base = build_simplex(f, t, std::move(h));
    unsigned m = base.m;

    Matrix gen(f, 2 * std::size_t(m), std::size_t(p + 1) * m);
    Matrix gt = materialize(TwistulantSpec(base.g, base.ring));
    for (unsigned b = 0; b < p; ++b) place_block(gen, 0, std::size_t(b) * m, gt);
    auto sel = select_B(base, p);  // all q^t - 1 codeword matrices
    for (unsigned b = 1; b < p; ++b)
        place_block(gen, m, std::size_t(b) * m, materialize(sel[b - 1]));
    place_block(gen, m, std::size_t(p) * m, gt);

    if (rank(gen) != 2 * t) throw Error("generator rank is not 2t (broken construction)");

    unsigned n = (p + 1) * m;
    unsigned d = pow_u(q, 2 * t - 1);
    return {std::move(base), std::move(gen), n, 2 * t, d};
}

std::pair<Matrix, Matrix> subcode_generators(const QTTwoWeightCode& c) {
    unsigned m = c.base.m;
    Matrix g1(c.base.field, m, c.generator.n_cols());
    Matrix g2(c.base.field, m, c.generator.n_cols());
    for (unsigned r = 0; r < m; ++r) {
        g1.set_row(r, c.generator.row(r));
        g2.set_row(r, c.generator.row(std::size_t(m) + r));
    }
    return {std::move(g1), std::move(g2)};
}

Matrix interleave_columns(const Matrix& block_form, unsigned blocks) {
    if (blocks == 0 || block_form.n_cols() % blocks != 0)
        throw BadGeometry("column count not divisible by block count");
    std::size_t m = block_form.n_cols() / blocks;
    Matrix out(block_form.field(), block_form.n_rows(), block_form.n_cols());
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t r = 0; r < block_form.n_rows(); ++r)
                out.at(r, s * blocks + b) = block_form.at(r, b * m + s);
    return out;
}

AnyQTCode construct_code(const Field& f, unsigned t, unsigned p,
                         std::optional<Polynomial> h,
                         std::optional<std::vector<Polynomial>> selection) {
    unsigned qt = pow_u(f.q(), t);
    if (p == qt + 1) {
        if (selection) throw BadInput("explicit selection is not accepted for p = q^t + 1");
        return build_simplex_2t(f, t, std::move(h));
    }
    return build_two_weight(f, t, p, std::move(h), std::move(selection));
}

const Matrix& generator_of(const AnyQTCode& c) {
    return std::visit([](const auto& x) -> const Matrix& { return x.generator; }, c);
}

const SimplexCode& base_of(const AnyQTCode& c) {
    return std::visit([](const auto& x) -> const SimplexCode& { return x.base; }, c);
}

}  // namespace qtc
