#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadsq/ideal.hpp"

using namespace quadsq;

namespace {

QuadInt rebuild(const Field& F, const Factorization& f) {
    QuadInt acc = f.unit;
    for (const auto& [pi, e] : f.primes)
        for (int i = 0; i < e; ++i) acc = F.mul(acc, pi);
    return acc;
}

}  // namespace

TEST_CASE("factor reconstructs the element") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        for (long a = -8; a <= 8; ++a)
            for (long b = -4; b <= 4; ++b) {
                QuadInt z(a, b);
                if (z.is_zero()) continue;
                auto f = factor(F, z);
                CHECK(F.is_unit(f.unit));
                CHECK(rebuild(F, f) == z);
                auto is_prime = [](Int n) {
                    if (n < 2) return false;
                    for (Int p = 2; p * p <= n; ++p)
                        if (n % p == 0) return false;
                    return true;
                };
                for (const auto& [pi, e] : f.primes) {
                    Int n = F.norm(pi);
                    if (n < 0) n = -n;
                    // prime norms are p or p^2
                    Int r = Int(boost::multiprecision::sqrt(n));
                    CHECK((is_prime(n) || (r * r == n && is_prime(r))));
                    CHECK(e >= 1);
                }
            }
    }
}

TEST_CASE("splitting of small rational primes") {
    const Field& F3 = Field::q3();
    CHECK(rational_prime_split(F3, 2).type == SplitType::Ramified);
    CHECK(rational_prime_split(F3, 3).type == SplitType::Ramified);
    CHECK(rational_prime_split(F3, 11).type == SplitType::Split);
    CHECK(rational_prime_split(F3, 5).type == SplitType::Inert);
    const Field& F17 = Field::q17();
    CHECK(rational_prime_split(F17, 2).type == SplitType::Split);
    CHECK(rational_prime_split(F17, 17).type == SplitType::Ramified);
    CHECK(rational_prime_split(F17, 13).type == SplitType::Split);
    CHECK(rational_prime_split(F17, 5).type == SplitType::Inert);
}

TEST_CASE("squarefree and valuation") {
    const Field& F3 = Field::q3();
    CHECK_FALSE(is_squarefree(F3, QuadInt(2, 0)));  // (2) = p2^2
    CHECK_FALSE(is_squarefree(F3, QuadInt(3, 0)));
    CHECK(is_squarefree(F3, QuadInt(5, 0)));
    CHECK(valuation(F3, QuadInt(4, 0), F3.pi2()) == 4);
    const Field& F17 = Field::q17();
    CHECK(is_squarefree(F17, QuadInt(2, 0)));  // (2) = p2 p2'
    CHECK(valuation(F17, QuadInt(4, 0), F17.pi2()) == 2);
}

TEST_CASE("divisor counts and moebius") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        for (long a = 1; a <= 10; ++a)
            for (long b = 0; b <= 3; ++b) {
                QuadInt z(a, b);
                if (z.is_zero()) continue;
                auto f = factor(F, z);
                long want = 1;
                for (const auto& [pi, e] : f.primes) want *= e + 1;
                CHECK((long)ideal_divisors(F, z).size() == want);
                // sum of moebius over divisors is 0 unless (z) = (1)
                int s = 0;
                for (const QuadInt& d : ideal_divisors(F, z)) s += mobius(F, d);
                CHECK(s == (f.primes.empty() ? 1 : 0));
            }
    }
}

TEST_CASE("squarefree decomposition") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        for (long a = 1; a <= 12; ++a)
            for (long b = -3; b <= 3; ++b) {
                QuadInt z(a, b);
                if (z.is_zero() || !F.is_totally_positive(z)) continue;
                auto [alpha, mu] = squarefree_decompose(F, z);
                CHECK(is_squarefree(F, alpha));
                CHECK(F.is_totally_positive(alpha));
                CHECK(F.mul(alpha, F.mul(mu, mu)) == z);
            }
    }
}
