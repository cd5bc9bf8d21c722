#include <doctest.h>

#include "qtc/gf.hpp"

using namespace qtc;

namespace {

// test-only oracle: irreducibility over GF(2) of a quadratic with
// coefficient bits (c0, c1), by root search
bool quadratic_irreducible_gf2(unsigned c0, unsigned c1) {
    for (unsigned x = 0; x < 2; ++x)
        if (((x * x) + c1 * x + c0) % 2 == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("make_field on prime and prime-power sizes") {
    Field f2 = make_field(2);
    CHECK(f2.q() == 2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.ext_degree() == 1);

    Field f4 = make_field(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.ext_degree() == 2);
    // x^2 + x + 1 is the unique monic irreducible quadratic over GF(2)
    CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
    int irreducible = 0;
    for (unsigned c0 = 0; c0 < 2; ++c0)
        for (unsigned c1 = 0; c1 < 2; ++c1)
            if (quadratic_irreducible_gf2(c0, c1)) {
                ++irreducible;
                CHECK(c0 == 1);
                CHECK(c1 == 1);
            }
    CHECK(irreducible == 1);

    CHECK_THROWS_AS(make_field(6), NotPrimePower);
    CHECK_THROWS_AS(make_field(1), NotPrimePower);
    CHECK_THROWS_AS(make_field(512), NotPrimePower);
}

TEST_CASE("field arithmetic examples") {
    Field f3 = make_field(3);
    CHECK(f3.add(2, 2) == 1);

    Field f4 = make_field(4);
    CHECK(f4.mul(2, 2) == 3);  // w * w = w + 1 under x^2 + x + 1

    Field f5 = make_field(5);
    CHECK(f5.mul(3, 4) == 2);

    CHECK_THROWS_AS(f5.inv(0), DivisionByZero);
    FieldElement a(f3, 1), b(f5, 1);
    CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("primitive element and element order") {
    CHECK(make_field(2).primitive_element() == 1);
    CHECK(make_field(3).primitive_element() == 2);
    CHECK(make_field(5).primitive_element() == 2);  // 2 has order 4 mod 5

    CHECK(make_field(3).element_order(2) == 2);
    CHECK(make_field(5).element_order(4) == 2);
    CHECK(make_field(4).element_order(2) == 3);  // w^3 = 1
    CHECK_THROWS_AS(make_field(5).element_order(0), ZeroElement);
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        Field f = make_field(q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        for (unsigned a = 1; a < q; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, q - 1) == 1);  // Lagrange
        }
        // powers of the primitive element enumerate all nonzero elements
        unsigned g = f.primitive_element();
        CHECK(f.element_order(g) == q - 1);
        std::vector<bool> seen(q, false);
        unsigned x = 1;
        for (unsigned e = 0; e < q - 1; ++e) {
            CHECK(!seen[x]);
            seen[x] = true;
            x = f.mul(x, g);
        }
    }
}

TEST_CASE("encoding round-trips through polynomial coordinates") {
    Field f9 = make_field(9);
    unsigned p = f9.characteristic();
    for (unsigned enc = 0; enc < 9; ++enc) {
        unsigned lo = enc % p, hi = enc / p;
        CHECK(lo + hi * p == enc);
    }
    // GF(9) modulus is a monic irreducible quadratic over GF(3)
    CHECK(f9.modulus().size() == 3);
    CHECK(f9.modulus().back() == 1);
}
