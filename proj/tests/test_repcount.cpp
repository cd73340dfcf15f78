#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadsq/repcount.hpp"

using namespace quadsq;

TEST_CASE("small counts") {
    const Field& F3 = Field::q3();
    CHECK(r2_brute(F3, QuadInt(1, 0)) == 4);
    CHECK(r2_brute(F3, QuadInt(2, 0)) == 4);
    CHECK(r2_brute(F3, QuadInt(3, 0)) == 4);  // (+-sqrt3)^2 + 0
    CHECK(r3_brute(F3, QuadInt(1, 0)) == 6);
    CHECK(r3_brute(F3, QuadInt(11, 0)) == 96);
    const Field& F17 = Field::q17();
    CHECK(r2_brute(F17, QuadInt(2, 0)) == 4);
    CHECK(r3_brute(F17, QuadInt(1, 0)) == 6);
    CHECK(r3_brute(F17, QuadInt(3, 0)) == 8);
}

TEST_CASE("counts vanish off the totally positive cone") {
    const Field& F3 = Field::q3();
    CHECK(r2_brute(F3, QuadInt(1, 1)) == 0);
    CHECK(r3_brute(F3, QuadInt(-2, 0)) == 0);
}

TEST_CASE("conjugation invariance") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        for (long a = 1; a <= 9; ++a)
            for (long b = -2; b <= 2; ++b) {
                QuadInt nu(a, b);
                if (!F.is_totally_positive(nu)) continue;
                CHECK(r2_brute(F, nu) == r2_brute(F, F.conj(nu)));
                CHECK(r3_brute(F, nu) == r3_brute(F, F.conj(nu)));
            }
    }
}

TEST_CASE("invariance under unit squares") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        QuadInt u2 = F.mul(F.eps0(), F.eps0());
        for (long a = 1; a <= 7; ++a) {
            QuadInt nu(a, 0);
            CHECK(r3_brute(F, F.mul(u2, nu)) == r3_brute(F, nu));
            CHECK(r2_brute(F, F.mul(u2, nu)) == r2_brute(F, nu));
        }
    }
}

TEST_CASE("squares_upto counts square roots") {
    const Field& F3 = Field::q3();
    auto sq = squares_upto(F3, QuadInt(30, 0));
    CHECK(sq[{1, 0}] == 2);
    CHECK(sq[{4, 0}] == 2);
    CHECK(sq[{3, 0}] == 2);             // (+-sqrt3)^2
    CHECK(sq[{7, 4}] == 2);             // (2+sqrt3)^2
    CHECK(sq.count({2, 0}) == 0);
}
