#include <doctest.h>

#include "qtc/bounds.hpp"

using namespace qtc;

TEST_CASE("griesmer_n") {
    CHECK(griesmer_n(6, 225, 3) == 338);
    CHECK(griesmer_n(6, 144, 3) == 217);
    CHECK(griesmer_n(4, 24, 3) == 36);  // 24+8+3+1
    CHECK(griesmer_n(6, 28, 2) == 56);  // 28+14+7+4+2+1
    CHECK(griesmer_n(5, 1, 7) == 5);    // d = 1: all ceilings are 1
    CHECK_THROWS_AS(griesmer_n(0, 5, 2), BadInput);
    CHECK_THROWS_AS(griesmer_n(3, 0, 2), BadInput);
}

TEST_CASE("gap") {
    CHECK(gap(4, 3, 3) == 4);
    CHECK(gap(3, 3, 3) == 2);
    CHECK(gap(2, 3, 3) == 1);
    for (unsigned t : {2u, 3u, 4u})
        for (unsigned q : {2u, 3u, 5u}) CHECK(gap(1, t, q) == 0);
    CHECK_THROWS_AS(gap(0, 3, 3), BadInput);
    CHECK_THROWS_AS(gap(10, 3, 3), BadInput);  // i > q^{t-1}
}

TEST_CASE("gap is nondecreasing in i") {
    for (unsigned q : {2u, 3u, 5u})
        for (unsigned t : {2u, 3u}) {
            unsigned qmax = 1;
            for (unsigned i = 0; i + 1 < t; ++i) qmax *= q;
            for (unsigned i = 1; i < qmax; ++i) CHECK(gap(i, t, q) <= gap(i + 1, t, q));
        }
}

TEST_CASE("decompose_p") {
    auto tp = decompose_p(17, 3, 3);
    CHECK(tp.i == 4);
    CHECK(tp.r == 1);

    tp = decompose_p(28, 3, 3);
    CHECK(tp.i == 1);
    CHECK(tp.r == 3);

    tp = decompose_p(2, 3, 3);
    CHECK(tp.i == 9);
    CHECK(tp.r == 1);

    CHECK_THROWS_AS(decompose_p(1, 3, 3), OutOfRange);
    CHECK_THROWS_AS(decompose_p(29, 3, 3), OutOfRange);
}

TEST_CASE("decompose_p inverts the (i, r) parameterization") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned t : {2u, 3u}) {
            unsigned qt = 1, qt1 = 1;
            for (unsigned i = 0; i < t; ++i) qt *= q;
            for (unsigned i = 0; i + 1 < t; ++i) qt1 *= q;
            for (unsigned i = 1; i <= qt1; ++i)
                for (unsigned r = 1; r <= q; ++r) {
                    unsigned p = qt - i * q + r + 1;
                    if (p < 2) continue;
                    auto tp = decompose_p(p, q, t);
                    CHECK(tp.i == i);
                    CHECK(tp.r == r);
                }
        }
}

TEST_CASE("theorem5_report") {
    auto [rep, tp] = theorem5_report(3, 3, 20);
    CHECK(rep.n == 260);
    CHECK(rep.d == 171);
    CHECK(rep.griesmer_n == 258);
    CHECK(rep.slack == 2);

    auto [rep26, tp26] = theorem5_report(3, 3, 26);
    CHECK(rep26.n == 338);
    CHECK(rep26.griesmer_n == 338);
    CHECK(rep26.meets_bound);

    auto [rep28, tp28] = theorem5_report(3, 3, 28);
    CHECK(rep28.n == 364);
    CHECK(rep28.d == 243);
    CHECK(rep28.griesmer_n == 364);
}

TEST_CASE("table1 rows") {
    auto rows = table1();
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].p == 17);
    CHECK(rows[0].d == 144);
    CHECK(rows[0].n == 221);
    CHECK(rows[0].gb == 217);
    CHECK(rows[0].gap == 4);
    CHECK(rows[6].p == 23);
    CHECK(rows[6].d == 198);
    CHECK(rows[6].gb == 298);
    CHECK(rows[6].gap == 1);
    CHECK(rows[10].p == 27);
    CHECK(rows[10].n == 351);
    CHECK(rows[10].gb == 351);
    CHECK(rows[10].gap == 0);

    auto csv = table1_csv();
    CHECK(csv.rfind("p,d,n,gb,gap,i,r,q\n", 0) == 0);
    CHECK(csv.find("17,144,221,217,4,4,1,3") != std::string::npos);
    CHECK(csv.find("28,243,364,364,0,1,3,3") != std::string::npos);
}

TEST_CASE("classification flags") {
    auto flags = classify(3, 2, 9, 36, 4, 24);
    CHECK(flags.meets_griesmer);
    CHECK(flags.paper_d_optimal);

    flags = classify(3, 3, 17, 221, 6, 144);
    CHECK(flags.griesmer_slack == 4);
    CHECK_FALSE(flags.paper_d_optimal);  // recorded as good, not d-optimal

    flags = classify(2, 3, 8, 56, 6, 28);
    CHECK(flags.meets_griesmer);
    CHECK(flags.paper_d_optimal);
}
