#pragma once

#include <utility>
#include <vector>

#include "quadsq/field.hpp"

namespace quadsq {

enum class SplitType { Split, Inert, Ramified };

struct PrimeSplit {
    SplitType type;
    QuadInt pi;   // prime above p (canonical representative)
    QuadInt pip;  // conjugate prime, Split only
};

/** Splitting of the rational prime p in the field. */
PrimeSplit rational_prime_split(const Field& F, const Int& p);

/** Factorization nu = unit * prod primes[i]^e[i].
 *
 * Prime representatives are the canonical totally positive associate when
 * one exists, otherwise the canonical associate with positive first
 * embedding.  Sorted by (|norm|, x, y).
 */
struct Factorization {
    QuadInt unit;
    std::vector<std::pair<QuadInt, int>> primes;
};

Factorization factor(const Field& F, const QuadInt& nu);

int valuation(const Field& F, const QuadInt& nu, const QuadInt& pi);

bool is_squarefree(const Field& F, const QuadInt& nu);

/** One representative element per ideal divisor of (nu), all exponent
 *  combinations of the factorization, unit ideal first. */
std::vector<QuadInt> ideal_divisors(const Field& F, const QuadInt& nu);

/** Totally positive canonical generators of the ideal divisors of (nu);
 *  divisors whose ideal has no totally positive generator are skipped.
 *  Sorted by (trace, x, y). */
std::vector<QuadInt> tp_divisors(const Field& F, const QuadInt& nu);

/// Moebius function of the ideal (nu).
int mobius(const Field& F, const QuadInt& nu);

/** Write totally positive nu as alpha * mu^2 with (alpha) squarefree,
 *  alpha totally positive.  Returns (alpha, mu). */
std::pair<QuadInt, QuadInt> squarefree_decompose(const Field& F, const QuadInt& nu);

}  // namespace quadsq
