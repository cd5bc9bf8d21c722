#include <doctest.h>

#include "qtc/analyze.hpp"
#include "qtc/qtconstruct.hpp"

using namespace qtc;

namespace {

std::vector<unsigned> nonzero_weights(const LinearCode& lc) {
    auto wd = weight_distribution(lc);
    std::vector<unsigned> ws;
    for (const auto& [w, cnt] : wd.counts)
        if (w != 0) ws.push_back(w);
    return ws;
}

}  // namespace

TEST_CASE("select_B takes the canonical prefix") {
    Field f2 = make_field(2);
    SimplexCode base = build_simplex(f2, 3, Polynomial(f2, {1, 1, 0, 1}));
    auto sel = select_B(base, 8);
    CHECK(sel.size() == 7);
    for (unsigned j = 0; j < 7; ++j)
        CHECK(sel[j].defining_poly ==
              reduce_mod(poly_mul(Polynomial::x_pow(f2, j), base.g), base.ring));

    auto sel2 = select_B(base, 2);
    CHECK(sel2.size() == 1);
    CHECK(sel2[0].defining_poly == base.g);

    Field f3 = make_field(3);
    SimplexCode base3 = build_simplex(f3, 2, poly_from_signed(f3, {-1, -1, 1}));
    CHECK(select_B(base3, 9).size() == 8);  // p-1 = q^t-1 exhausts the set

    CHECK_THROWS_AS(select_B(base, 1), BadP);
    CHECK_THROWS_AS(select_B(base, 9), BadP);
}

TEST_CASE("build_two_weight reproduces the published parameters") {
    struct Case {
        unsigned q, t, p, n, w1, w2;
    };
    const Case cases[] = {
        {2, 3, 8, 56, 28, 32}, {2, 3, 2, 14, 4, 8}, {3, 2, 9, 36, 24, 27},
        {3, 3, 17, 221, 144, 153}};
    for (const auto& c : cases) {
        CAPTURE(c.q);
        CAPTURE(c.p);
        QTTwoWeightCode code = build_two_weight(make_field(c.q), c.t, c.p);
        CHECK(code.n == c.n);
        CHECK(code.k == 2 * c.t);
        LinearCode lc = make_linear_code(code.generator);
        CHECK(lc.k == 2 * c.t);
        CHECK(nonzero_weights(lc) == std::vector<unsigned>{c.w1, c.w2});
    }
    CHECK_THROWS_AS(build_two_weight(make_field(2), 3, 1), BadP);
    CHECK_THROWS_AS(build_two_weight(make_field(2), 3, 9), BadP);
}

TEST_CASE("explicit selections are validated") {
    Field f2 = make_field(2);
    SimplexCode base = build_simplex(f2, 3);
    auto polys = codeword_polys(base);

    std::vector<Polynomial> dup = {polys[0], polys[0]};
    CHECK_THROWS_AS(build_two_weight(f2, 3, 3, base.h, dup), DuplicateSelection);

    std::vector<Polynomial> foreign = {Polynomial(f2, {1})};
    CHECK_THROWS_AS(build_two_weight(f2, 3, 2, base.h, foreign), NotCodeword);

    // any distinct selection preserves the two-weight set
    std::vector<Polynomial> sel = {polys[6], polys[2], polys[4]};
    QTTwoWeightCode code = build_two_weight(f2, 3, 4, base.h, sel);
    LinearCode lc = make_linear_code(code.generator);
    CHECK(nonzero_weights(lc) == std::vector<unsigned>{12, 16});
}

TEST_CASE("build_simplex_2t produces equidistant dimension-2t simplex codes") {
    struct Case {
        unsigned q, t, n, d;
    };
    const Case cases[] = {{2, 2, 15, 8}, {3, 2, 40, 27}, {2, 3, 63, 32}};
    for (const auto& c : cases) {
        QTSimplexCode code = build_simplex_2t(make_field(c.q), c.t);
        CHECK(code.n == c.n);
        CHECK(code.k == 2 * c.t);
        LinearCode lc = make_linear_code(code.generator);
        auto eq = is_equidistant(lc);
        CHECK(eq);
        CHECK(*eq == c.d);
    }
}

TEST_CASE("subcode generators expose the equidistant C1 and C2") {
    Field f2 = make_field(2);
    QTTwoWeightCode code = build_two_weight(f2, 3, 8);
    auto [g1, g2] = subcode_generators(code);

    auto eq1 = is_equidistant(make_linear_code(g1));
    CHECK(eq1);
    CHECK(*eq1 == 32);  // p * q^{t-1}

    auto eq2 = is_equidistant(make_linear_code(g2));
    CHECK(eq2);
    CHECK(*eq2 == 28);  // (p-1) * q^{t-1}

    // ternary p=2: C2 is the simplex code prefixed by m zero columns
    Field f3 = make_field(3);
    QTTwoWeightCode c3 = build_two_weight(f3, 2, 2, poly_from_signed(f3, {-1, -1, 1}));
    auto [h1, h2] = subcode_generators(c3);
    auto eq3 = is_equidistant(make_linear_code(h2));
    CHECK(eq3);
    CHECK(*eq3 == 3);
    for (std::size_t r = 0; r < h2.n_rows(); ++r)
        for (std::size_t c = 0; c < 4; ++c) CHECK(h2.at(r, c) == 0);
}

TEST_CASE("interleaving permutes columns into the literal QT form") {
    SUBCASE("index pattern for p=2, m=3") {
        Field f2 = make_field(2);
        Matrix m(f2, 1, 6);
        m.set_row(0, {0, 1, 0, 1, 1, 0});
        Matrix il = interleave_columns(m, 2);
        // block column b*3+s moves to s*2+b
        CHECK(il.row(0) == std::vector<unsigned>{0, 1, 1, 1, 0, 0});
    }

    SUBCASE("blocks=1 is the identity") {
        Field f2 = make_field(2);
        QTTwoWeightCode code = build_two_weight(f2, 2, 2);
        CHECK(interleave_columns(code.generator, 1) == code.generator);
    }

    SUBCASE("shift by p positions preserves the interleaved code") {
        Field f2 = make_field(2);
        QTTwoWeightCode code = build_two_weight(f2, 3, 8);
        LinearCode il = make_linear_code(interleave_columns(code.generator, 8));
        CHECK(qt_closure(il, 8, 1, true));
    }
}

TEST_CASE("p = q^t plus the tail column reproduces the simplex generator") {
    Field f3 = make_field(3);
    QTTwoWeightCode full = build_two_weight(f3, 2, 9);
    QTSimplexCode sx = build_simplex_2t(f3, 2);
    // first 9 blocks agree; the tail block is (0 / G_t)
    for (std::size_t r = 0; r < sx.generator.n_rows(); ++r)
        for (std::size_t c = 0; c < full.generator.n_cols(); ++c)
            CHECK(sx.generator.at(r, c) == full.generator.at(r, c));
    Matrix gt = materialize(TwistulantSpec(full.base.g, full.base.ring));
    unsigned m = full.base.m;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            CHECK(sx.generator.at(r, 9 * m + c) == 0);
            CHECK(sx.generator.at(m + r, 9 * m + c) == gt.at(r, c));
        }
}

TEST_CASE("construct_code dispatches p = q^t + 1 to the simplex form") {
    Field f3 = make_field(3);
    AnyQTCode c = construct_code(f3, 2, 10);
    CHECK(std::holds_alternative<QTSimplexCode>(c));
    AnyQTCode c2 = construct_code(f3, 2, 9);
    CHECK(std::holds_alternative<QTTwoWeightCode>(c2));
    CHECK_THROWS_AS(construct_code(f3, 2, 11), BadP);
}
