#pragma once

#include <string>
#include <utility>

#include "quadsq/characters.hpp"
#include "quadsq/field.hpp"

namespace quadsq {

/// Number of two-square representations via the Eisenstein coefficient formula.
Int r2_closed(const Field& F, const QuadInt& nu);

struct R2Criterion {
    bool representable;
    Int count;
};

/// Two-square representability and count from the prime factorization shape.
R2Criterion r2_criterion(const Field& F, const QuadInt& nu);

/// Three-square representability test.
bool representable3(const Field& F, const QuadInt& nu);

/** r3(alpha * nu^2) by the closed formula (Moebius-inverted lift identity);
 *  h is taken from class_number(alpha). */
Int r3_closed(const Field& F, const QuadInt& alpha, const QuadInt& nu);

struct ClassNumberResult {
    QuadInt alpha;
    std::string case_label;
    long h;
    Int r3_used;
    bool special;
};

/** Class number of K(sqrt(-alpha)) extracted from a three-square count. */
ClassNumberResult class_number(const Field& F, const QuadInt& alpha);

/** Both sides of the coefficientwise lift identity at nu:
 *  lhs = sum over ideal divisors delta of (nu) of
 *        (psi_{-alpha} 1_m)(delta) r3_brute(alpha (nu/delta)^2),
 *  rhs = the closed Eisenstein side through h = class_number(alpha). */
std::pair<Rat, Rat> verify_cfc(const Field& F, const QuadInt& alpha, const QuadInt& nu);

}  // namespace quadsq
