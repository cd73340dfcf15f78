#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadsq/characters.hpp"
#include "quadsq/ideal.hpp"

using namespace quadsq;

namespace {

std::vector<QuadInt> squarefree_sample(const Field& F, int n) {
    std::vector<QuadInt> out;
    for (long a = 1; (int)out.size() < n; ++a)
        for (long b = -3; b <= 3 && (int)out.size() < n; ++b) {
            QuadInt z(a, b);
            if (!z.is_zero() && is_squarefree(F, z)) out.push_back(z);
        }
    return out;
}

}  // namespace

TEST_CASE("chi4K examples") {
    const Field& F3 = Field::q3();
    CHECK(chi4K(F3, QuadInt(5, 0)) == 1);
    CHECK(chi4K(F3, QuadInt(1, 1)) == 0);
    const Field& F17 = Field::q17();
    CHECK(chi4K(F17, QuadInt(3, 0)) == 1);
    CHECK(chi4K(F17, QuadInt(2, 1)) == 0);
}

TEST_CASE("rho2 examples and generator independence") {
    const Field& F3 = Field::q3();
    CHECK(rho2_element_q3(QuadInt(2, 1)) == -1);
    CHECK(rho2_element_q3(QuadInt(2, 0)) == 0);
    const Field& F17 = Field::q17();
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-6, 6), pw(0, 3);
    for (int i = 0; i < 100; ++i) {
        QuadInt nu(coeff(rng), coeff(rng));
        if (nu.is_zero()) continue;
        QuadInt u = F17.pow(F17.eps0(), pw(rng));
        CHECK(rho2_q17(F17, nu) == rho2_q17(F17, F17.mul(u, nu)));
        CHECK(rho2p_q17(F17, nu) == rho2p_q17(F17, F17.mul(u, nu)));
    }
}

TEST_CASE("rho2 pair multiplies to chi4K on odd elements") {
    const Field& F17 = Field::q17();
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b) {
            QuadInt nu(a, b);
            if (nu.is_zero() || F17.divides(nu, F17.pi2()) ||
                F17.divides(nu, F17.pi2p()))
                continue;
            CHECK(rho2_q17(F17, nu) * rho2p_q17(F17, nu) == chi4K(F17, nu));
        }
}

TEST_CASE("classification is invariant under eps0^2") {
    const Field& F3 = Field::q3();
    QuadInt u3 = F3.mul(F3.eps0(), F3.eps0());
    for (const QuadInt& a : squarefree_sample(F3, 200))
        CHECK(classify3(F3, a) == classify3(F3, F3.mul(u3, a)));
    const Field& F17 = Field::q17();
    QuadInt u17 = F17.mul(F17.eps0(), F17.eps0());
    for (const QuadInt& a : squarefree_sample(F17, 200))
        CHECK(classify17(F17, a) == classify17(F17, F17.mul(u17, a)));
}

TEST_CASE("negation involution on the classification") {
    const Field& F3 = Field::q3();
    for (const QuadInt& a : squarefree_sample(F3, 120)) {
        Case3 c = classify3(F3, a);
        Case3 n = classify3(F3, QuadInt(-a.x, -a.y));
        switch (c) {
            case Case3::A: CHECK(n == Case3::B); break;
            case Case3::B: CHECK(n == Case3::A); break;
            default: CHECK(n == c);
        }
    }
    const Field& F17 = Field::q17();
    auto flip = [](Case17 c) {
        switch (c) {
            case Case17::A: return Case17::CA;
            case Case17::CA: return Case17::A;
            case Case17::B: return Case17::CB;
            case Case17::CB: return Case17::B;
            default: return Case17::D;
        }
    };
    for (const QuadInt& a : squarefree_sample(F17, 120)) {
        auto [c, cp] = classify17(F17, a);
        auto [n, np] = classify17(F17, QuadInt(-a.x, -a.y));
        CHECK(n == flip(c));
        CHECK(np == flip(cp));
    }
}

TEST_CASE("psi regression at the norm 13 primes") {
    const Field& F3 = Field::q3();
    CHECK(psi_alpha(F3, QuadInt(-1, 0), QuadInt(4, 1)) == 1);
    CHECK(psi_alpha(F3, QuadInt(-5, 0), QuadInt(4, 1)) == -1);
}

TEST_CASE("psi_alpha is multiplicative") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(1, 9), small(0, 2);
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        for (const QuadInt& alpha : squarefree_sample(F, 12)) {
            for (int i = 0; i < 20; ++i) {
                QuadInt d1(coeff(rng), small(rng)), d2(coeff(rng), small(rng));
                if (!F.is_totally_positive(d1) || !F.is_totally_positive(d2)) continue;
                CHECK(psi_alpha(F, alpha, F.mul(d1, d2)) ==
                      psi_alpha(F, alpha, d1) * psi_alpha(F, alpha, d2));
            }
        }
    }
}

TEST_CASE("sigma is multiplicative for ideal characters") {
    const Field& F17 = Field::q17();
    Character chi = Character::chi4k();
    Character one = Character::trivial();
    for (long a1 = 1; a1 <= 7; ++a1)
        for (long a2 = 1; a2 <= 7; ++a2) {
            QuadInt n1(a1, 0), n2(a2, 1);
            if (!F17.is_totally_positive(n2)) continue;
            QuadInt g = F17.euclid_gcd(n1, n2);
            if (!F17.is_unit(g)) continue;
            for (int k = 0; k <= 1; ++k)
                CHECK(sigma(F17, k, chi, one, F17.mul(n1, n2)) ==
                      sigma(F17, k, chi, one, n1) * sigma(F17, k, chi, one, n2));
        }
}

TEST_CASE("sigma small values") {
    const Field& F17 = Field::q17();
    CHECK(sigma(F17, 0, Character::chi4k(), Character::trivial(), QuadInt(1, 0)) == 1);
    CHECK(sigma_rho_pair(F17, QuadInt(2, 0)) == 1);
    CHECK(sigma(F17, 1, Character::one_of(QuadInt(2, 0)), Character::trivial(),
                F17.pi2()) == 1);
}
