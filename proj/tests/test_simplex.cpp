#include <doctest.h>

#include <set>

#include "qtc/analyze.hpp"
#include "qtc/simplex.hpp"

using namespace qtc;

TEST_CASE("build_simplex reproduces the worked constructions") {
    SUBCASE("binary cyclic simplex [7,3,4]") {
        Field f2 = make_field(2);
        SimplexCode s = build_simplex(f2, 3, Polynomial(f2, {1, 1, 0, 1}));
        CHECK(s.m == 7);
        CHECK(s.lambda == 1);
        CHECK(s.g == Polynomial(f2, {1, 1, 1, 0, 1}));  // x^4+x^2+x+1
    }

    SUBCASE("2-consta-cyclic [4,2,3] over GF(3)") {
        Field f3 = make_field(3);
        SimplexCode s = build_simplex(f3, 2, poly_from_signed(f3, {-1, -1, 1}));
        CHECK(s.m == 4);
        CHECK(s.lambda == 2);
        CHECK(s.g == Polynomial(f3, {2, 1, 1}));  // x^2+x-1
    }

    SUBCASE("[3,2,2] over GF(2)") {
        Field f2 = make_field(2);
        SimplexCode s = build_simplex(f2, 2, Polynomial(f2, {1, 1, 1}));
        CHECK(s.m == 3);
        CHECK(s.lambda == 1);
        CHECK(s.g == Polynomial(f2, {1, 1}));
        auto eq = is_equidistant(make_linear_code(simplex_generator(s)));
        CHECK(eq);
        CHECK(*eq == 2);
    }

    SUBCASE("errors") {
        Field f3 = make_field(3);
        CHECK_THROWS_AS(build_simplex(f3, 1), BadDegree);
        CHECK_THROWS_AS(build_simplex(f3, 2, Polynomial(f3, {1, 0, 1})), NotPrimitive);
    }
}

TEST_CASE("simplex invariants across small fields") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = make_field(q);
        for (unsigned t : {2u, 3u}) {
            if (q >= 4 && t == 3) continue;
            SimplexCode s = build_simplex(f, t);
            // g * h reconstructs x^m - lambda
            std::vector<unsigned> xm(s.m + 1, 0);
            xm[0] = f.neg(s.lambda);
            xm[s.m] = 1;
            CHECK(poly_mul(s.g, s.h) == Polynomial(f, xm));
            CHECK(f.element_order(s.lambda) == q - 1);
            // equidistance with weight q^{t-1}
            unsigned w = 1;
            for (unsigned i = 0; i + 1 < t; ++i) w *= q;
            auto eq = is_equidistant(make_linear_code(simplex_generator(s)));
            CHECK(eq);
            CHECK(*eq == w);
        }
    }
}

TEST_CASE("explicit-g path on the degree-10 ternary generator") {
    Field f3 = make_field(3);
    Polynomial g = poly_from_signed(f3, {1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1});
    SimplexCode s = simplex_from_explicit_g(f3, 13, 1, g);
    CHECK(s.t == 3);
    LinearCode lc = make_linear_code(simplex_generator(s));
    CHECK(lc.n == 13);
    CHECK(lc.k == 3);
    CHECK(min_distance(lc) == 9);
}

TEST_CASE("explicit-g rejections") {
    Field f2 = make_field(2);
    // (x^4-1)/(x+1) has dimension 3 and mixed weights
    CHECK_THROWS_AS(simplex_from_explicit_g(f2, 4, 1, Polynomial(f2, {1, 1})), NotSimplex);
    // x^2+x does not divide x^3 - 1
    CHECK_THROWS_AS(simplex_from_explicit_g(f2, 3, 1, Polynomial(f2, {0, 1, 1})), NotDivisor);
    // explicit [3,2,2] still works
    SimplexCode s = simplex_from_explicit_g(f2, 3, 1, Polynomial(f2, {1, 1}));
    CHECK(s.t == 2);
}

TEST_CASE("codeword_polys enumerates all distinct nonzero codewords") {
    SUBCASE("binary t=3: seven shifts of g") {
        Field f2 = make_field(2);
        SimplexCode s = build_simplex(f2, 3, Polynomial(f2, {1, 1, 0, 1}));
        auto polys = codeword_polys(s);
        CHECK(polys.size() == 7);
        for (unsigned j = 0; j < 7; ++j)
            CHECK(polys[j] == reduce_mod(poly_mul(Polynomial::x_pow(f2, j), s.g), s.ring));
    }

    SUBCASE("ternary t=2: eight entries, a in {1,2}") {
        Field f3 = make_field(3);
        SimplexCode s = build_simplex(f3, 2, poly_from_signed(f3, {-1, -1, 1}));
        auto polys = codeword_polys(s);
        CHECK(polys.size() == 8);
        CHECK(polys[0] == s.g);                    // a=1, j=0
        CHECK(polys[4] == poly_scale(s.g, 2));     // a=2, j=0
    }

    SUBCASE("distinctness and shift closure for ternary t=3") {
        Field f3 = make_field(3);
        SimplexCode s = build_simplex(f3, 3);
        auto polys = codeword_polys(s);
        CHECK(polys.size() == 26);
        std::set<std::vector<unsigned>> seen;
        for (const auto& p : polys) seen.insert(p.coeffs());
        CHECK(seen.size() == 26);
        // the x-multiple of every entry is again an entry
        for (const auto& p : polys) {
            auto shifted = mul_mod(Polynomial::x_pow(f3, 1), p, s.ring);
            CHECK(seen.count(shifted.coeffs()) == 1);
        }
    }
}
