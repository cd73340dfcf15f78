#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quadsq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldId { Q3, Q17 };

/** Element of the ring of integers, written x + y*theta.
 *
 * For Q(sqrt 3) the generator theta is sqrt(3); for Q(sqrt 17) it is
 * omega = (1 + sqrt 17)/2, so omega^2 = omega + 4.  Coordinates are
 * arbitrary-precision integers; all arithmetic is exact.
 */
struct QuadInt {
    Int x{0};
    Int y{0};

    QuadInt() = default;
    QuadInt(Int a, Int b) : x(std::move(a)), y(std::move(b)) {}
    QuadInt(long a, long b) : x(a), y(b) {}
    explicit QuadInt(long a) : x(a), y(0) {}

    bool operator==(const QuadInt&) const = default;
    QuadInt operator+(const QuadInt& o) const { return {x + o.x, y + o.y}; }
    QuadInt operator-(const QuadInt& o) const { return {x - o.x, y - o.y}; }
    QuadInt operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

std::ostream& operator<<(std::ostream& os, const QuadInt& z);

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Arithmetic context for one of the two real quadratic fields. */
class Field {
  public:
    explicit Field(FieldId id);

    static const Field& q3();
    static const Field& q17();
    static const Field& by_name(const std::string& name);

    FieldId id() const { return id_; }
    const char* name() const { return id_ == FieldId::Q3 ? "q3" : "q17"; }
    /// Fundamental unit: 2+sqrt(3) resp. 3+2*omega.
    const QuadInt& eps0() const { return eps0_; }
    /// Generator of the totally positive units: eps0 for Q3, eps0^2 for Q17.
    const QuadInt& tp_unit_gen() const { return tp_unit_gen_; }
    /// Distinguished prime above 2: 1+sqrt(3) resp. 2+omega.
    const QuadInt& pi2() const { return pi2_; }
    /// Conjugate prime above 2 (Q17 only): 3-omega.
    const QuadInt& pi2p() const;
    bool two_splits() const { return id_ == FieldId::Q17; }

    QuadInt mul(const QuadInt& a, const QuadInt& b) const;
    QuadInt conj(const QuadInt& z) const;
    Int norm(const QuadInt& z) const;
    Int trace(const QuadInt& z) const;
    QuadInt pow(const QuadInt& z, unsigned long e) const;

    /// Exact sign of the first (i=0) or second (i=1) real embedding.
    int embed_sign(const QuadInt& z, int i) const;
    bool is_totally_positive(const QuadInt& z) const;
    /// Every embedding nonnegative (used for remainder tests).
    bool is_totally_nonneg(const QuadInt& z) const;
    double embed(const QuadInt& z, int i) const;

    bool is_unit(const QuadInt& z) const;
    /// Inverse of a unit.
    QuadInt unit_inverse(const QuadInt& u) const;

    bool divides(const QuadInt& a, const QuadInt& b) const;  // b | a
    QuadInt div_exact(const QuadInt& a, const QuadInt& b) const;

    /// gcd via norm-Euclidean division; result defined up to units.
    QuadInt euclid_gcd(QuadInt a, QuadInt b) const;

    /** The unique totally positive associate w of z with
     *  w1/w2 in [1, u1/u2) for u = tp_unit_gen(), or nullopt if no
     *  associate of z is totally positive (possible only in Q3). */
    std::optional<QuadInt> canonical_tp_associate(const QuadInt& z) const;

    /** Unique associate with positive first embedding and
     *  |w1/w2| in [1, e1/e2) for e = eps0().  Exists for every z != 0. */
    QuadInt canonical_associate(const QuadInt& z) const;

    /// Write a tp unit as tp_unit_gen()^k; throws if u is not one.
    long tp_unit_log(const QuadInt& u) const;

    QuadInt parse(const std::string& s) const;
    std::string format(const QuadInt& z) const;

  private:
    FieldId id_;
    QuadInt eps0_, tp_unit_gen_, pi2_, pi2p_;

    // sign of A + B*sqrt(D) with D = 3 or 17
    int surd_sign(const Int& A, const Int& B) const;
};

}  // namespace quadsq
