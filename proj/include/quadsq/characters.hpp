#pragma once

#include <string>
#include <utility>

#include "quadsq/field.hpp"

namespace quadsq {

/// chi_{-4} on odd rational integers, 0 on even ones.
int chi4(const Int& n);

/** The quadratic character attached to K(sqrt(-1))/K, as a function of the
 *  ideal (nu).  Q3: sgn(norm) on elements coprime to pi2, else 0.
 *  Q17: chi_{-4}(ideal norm) on odd ideals, else 0. */
int chi4K(const Field& F, const QuadInt& nu);

/// Q3 element character mod pi2^2: (-1)^y on odd elements, 0 on even ones.
int rho2_element_q3(const QuadInt& nu);

/// Q17 ideal characters mod pi2^2 resp. pi2p^2.
int rho2_q17(const Field& F, const QuadInt& nu);
int rho2p_q17(const Field& F, const QuadInt& nu);

/** Quadratic residue symbol of beta modulo the odd prime pi, computed by
 *  Euler's criterion in the residue field.  0 if pi | beta. */
int qr_symbol(const Field& F, const QuadInt& beta, const QuadInt& pi);

/// Behavior of K(sqrt(alpha))/K above 2 in Q(sqrt 3), alpha squarefree.
enum class Case3 { A, B, C1, C2, D };

Case3 classify3(const Field& F, const QuadInt& alpha);

/// Per-prime behavior above 2 in Q(sqrt 17): residue of alpha mod pi^3.
enum class Case17 { A, B, CA, CB, D };

std::pair<Case17, Case17> classify17(const Field& F, const QuadInt& alpha);

/// Coarse grouping of classify17 used by the counting formulas.
enum class Coarse17 { E, F, G, Excluded };

Coarse17 coarse17(const Field& F, const QuadInt& alpha);

const char* to_string(Case3 c);
const char* to_string(Case17 c);
const char* to_string(Coarse17 c);

/** Quadratic character of K(sqrt(alpha))/K at the ideal (delta):
 *  completely multiplicative, qr_symbol at odd primes, classification
 *  table value at primes above 2.  alpha must generate a squarefree ideal. */
int psi_alpha(const Field& F, const QuadInt& alpha, const QuadInt& delta);

/** Ideal character selector for divisor sums. */
struct Character {
    enum Kind { Trivial, Chi4K, Rho2, Rho2p, OneOf, PsiAlpha } kind = Trivial;
    QuadInt arg{1, 0};  // modulus for OneOf, alpha for PsiAlpha

    static Character trivial() { return {Trivial, {1, 0}}; }
    static Character chi4k() { return {Chi4K, {1, 0}}; }
    static Character rho2() { return {Rho2, {1, 0}}; }
    static Character rho2p() { return {Rho2p, {1, 0}}; }
    static Character one_of(QuadInt m) { return {OneOf, std::move(m)}; }
    static Character psi(QuadInt alpha) { return {PsiAlpha, std::move(alpha)}; }

    int eval(const Field& F, const QuadInt& delta) const;
};

/** Twisted divisor sum: sum over ideal divisors (delta) of (nu) of
 *  psi(delta) * psip(nu/delta) * N(delta)^k1, with nu first divided
 *  exactly by denom_scale (0 if not divisible). */
Int sigma(const Field& F, int k1, const Character& psi, const Character& psip,
          const QuadInt& nu, const QuadInt& denom_scale = QuadInt(1, 0));

/** The weight-one rho-twisted divisor sum entering the r2 formulas.
 *  Q3 uses the reduced element-level form rho2(nu) * sigma_{0,chi}^{1_p2}(nu);
 *  Q17 is sigma_{0,rho2}^{rho2p}(nu). */
Int sigma_rho_pair(const Field& F, const QuadInt& nu);

}  // namespace quadsq
