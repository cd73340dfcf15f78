#pragma once

#include <map>
#include <vector>

#include "quadsq/field.hpp"

namespace quadsq {

/** Squares s = x^2 with both embeddings of s at most those of bound,
 *  together with the number of roots x (2 for x != 0).  Keys ordered. */
std::map<std::pair<Int, Int>, long> squares_upto(const Field& F, const QuadInt& bound);

/// Number of (x1,x2) with x1^2+x2^2 = nu, exhaustive.
Int r2_brute(const Field& F, const QuadInt& nu);

/// Number of (x1,x2,x3) with x1^2+x2^2+x3^2 = nu, exhaustive (memoized).
Int r3_brute(const Field& F, const QuadInt& nu);

}  // namespace quadsq
