#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadsq/characters.hpp"
#include "quadsq/field.hpp"

namespace quadsq {

/** Truncated Fourier expansion over O_K: a constant term plus exact rational
 *  coefficients at totally positive elements of trace at most T.  Since the
 *  trace of a sum of totally positive elements is the sum of traces, products
 *  of truncations are exact below the common bound. */
struct FourierSeries {
    const Field* F = nullptr;
    long T = 0;
    Rat constant = 0;
    bool constant_known = true;
    std::map<std::pair<Int, Int>, Rat> coeffs;

    Rat at(const QuadInt& nu) const;
    void set(const QuadInt& nu, const Rat& c);
};

/// Totally positive elements of trace <= T, sorted by (trace, x, y).
std::vector<QuadInt> tp_elements_upto(const Field& F, long T);

/// Generating series of squares: constant 1, coefficient #{x : x^2 = nu}.
FourierSeries theta(const Field& F, long T);

/// The Eisenstein series instantiated in this setting, by role.
enum class EisSeries {
    G1Chi,         // weight 1, chi4K
    G1ChiOne,      // weight 1, chi4K twisted by the divisor condition at pi2
    G1ChiOneHalf,  // same, coefficients evaluated at nu/2
    G1Pair,        // weight 1, the rho-pair series
    G2,            // weight 2, trivial
    G2OneP2,       // weight 2, divisors coprime to pi2
    G2OneP2p,      // weight 2, divisors coprime to pi2' (Q17)
    G2One2,        // weight 2, divisors coprime to 2 (Q17)
};

FourierSeries eisenstein(const Field& F, EisSeries s, long T);

/** Character-pair surface; maps onto the named series above or throws
 *  InvalidInput for an uninstantiated combination. */
FourierSeries eisenstein(const Field& F, int k, const Character& psi,
                         const Character& psip, const QuadInt& denom_scale, long T);

FourierSeries series_add(const FourierSeries& a, const FourierSeries& b);
FourierSeries series_scale(const Rat& c, const FourierSeries& f);
FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b);

/// Coefficient reindexing c_nu -> c_{mu*nu}; shrinks the trace bound.
FourierSeries u_op(const QuadInt& mu, const FourierSeries& f);

/// f(n*z) for a rational integer n: coefficient of n*nu is f's at nu.
FourierSeries dilate(long n, const FourierSeries& f);

FourierSeries build_pefe3(const Field& F, long T);
FourierSeries build_xi3(const Field& F, long T);
FourierSeries build_phi17(const Field& F, long T);
FourierSeries build_xi17(const Field& F, long T);

struct VerifyReport {
    std::vector<QuadInt> mismatches;
    bool constant_checked = false;
    bool xi_fit = false;  // mismatches match a multiple of the cusp form
    Rat xi_multiple = 0;
    bool pass() const { return mismatches.empty(); }
};

/// theta^2 against the weight-1 Eisenstein combination, coefficientwise.
VerifyReport verify_theta_sq(const Field& F, long T);

/// Lift identity at every admissible nu with trace <= T.
VerifyReport verify_lift(const Field& F, const QuadInt& alpha, long T);

/// One line per coefficient: "trace x y num/den", constant first as trace 0.
std::string dump(const FourierSeries& f);

}  // namespace quadsq
