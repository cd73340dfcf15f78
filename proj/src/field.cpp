#include "quadsq/field.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace quadsq {

namespace {
int sgn(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
}  // namespace

std::ostream& operator<<(std::ostream& os, const QuadInt& z) {
    return os << "(" << z.x << "," << z.y << ")";
}

Field::Field(FieldId id) : id_(id) {
    if (id_ == FieldId::Q3) {
        eps0_ = {2, 1};
        tp_unit_gen_ = eps0_;
        pi2_ = {1, 1};
    } else {
        eps0_ = {3, 2};
        tp_unit_gen_ = mul(eps0_, eps0_);  // 25+16*omega
        pi2_ = {2, 1};
        pi2p_ = {3, -1};
    }
}

const Field& Field::q3() {
    static const Field f(FieldId::Q3);
    return f;
}

const Field& Field::q17() {
    static const Field f(FieldId::Q17);
    return f;
}

const Field& Field::by_name(const std::string& name) {
    if (name == "q3") return q3();
    if (name == "q17") return q17();
    throw InvalidInput("unknown field: " + name);
}

const QuadInt& Field::pi2p() const {
    if (id_ != FieldId::Q17) throw InvalidInput("pi2p: prime 2 is ramified in Q(sqrt 3)");
    return pi2p_;
}

QuadInt Field::mul(const QuadInt& a, const QuadInt& b) const {
    if (id_ == FieldId::Q3)
        return {a.x * b.x + 3 * a.y * b.y, a.x * b.y + a.y * b.x};
    return {a.x * b.x + 4 * a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
}

QuadInt Field::conj(const QuadInt& z) const {
    if (id_ == FieldId::Q3) return {z.x, -z.y};
    return {z.x + z.y, -z.y};
}

Int Field::norm(const QuadInt& z) const {
    if (id_ == FieldId::Q3) return z.x * z.x - 3 * z.y * z.y;
    return z.x * z.x + z.x * z.y - 4 * z.y * z.y;
}

Int Field::trace(const QuadInt& z) const {
    if (id_ == FieldId::Q3) return 2 * z.x;
    return 2 * z.x + z.y;
}

QuadInt Field::pow(const QuadInt& z, unsigned long e) const {
    QuadInt r{1, 0}, base = z;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::surd_sign(const Int& A, const Int& B) const {
    const int D = id_ == FieldId::Q3 ? 3 : 17;
    if (A == 0 && B == 0) return 0;
    if (A >= 0 && B >= 0) return 1;
    if (A <= 0 && B <= 0) return -1;
    // opposite signs: compare A^2 against D*B^2
    Int a2 = A * A, db2 = D * B * B;
    if (a2 == db2) return 0;  // cannot happen for D nonsquare unless both 0
    if (A > 0) return a2 > db2 ? 1 : -1;
    return db2 > a2 ? 1 : -1;
}

int Field::embed_sign(const QuadInt& z, int i) const {
    // z = (A + B*sqrt(D)) / 2^t with A,B integral
    Int A, B;
    if (id_ == FieldId::Q3) {
        A = z.x;
        B = z.y;
    } else {
        A = 2 * z.x + z.y;
        B = z.y;
    }
    if (i == 1) B = -B;
    return surd_sign(A, B);
}

bool Field::is_totally_positive(const QuadInt& z) const {
    return embed_sign(z, 0) > 0 && embed_sign(z, 1) > 0;
}

bool Field::is_totally_nonneg(const QuadInt& z) const {
    return embed_sign(z, 0) >= 0 && embed_sign(z, 1) >= 0;
}

double Field::embed(const QuadInt& z, int i) const {
    double th = id_ == FieldId::Q3 ? std::sqrt(3.0) : (1.0 + std::sqrt(17.0)) / 2.0;
    double thc = id_ == FieldId::Q3 ? -std::sqrt(3.0) : (1.0 - std::sqrt(17.0)) / 2.0;
    return z.x.convert_to<double>() + z.y.convert_to<double>() * (i == 0 ? th : thc);
}

bool Field::is_unit(const QuadInt& z) const {
    Int n = norm(z);
    return n == 1 || n == -1;
}

QuadInt Field::unit_inverse(const QuadInt& u) const {
    Int n = norm(u);
    if (n == 1) return conj(u);
    if (n == -1) return -conj(u);
    throw InvalidInput("unit_inverse: not a unit");
}

bool Field::divides(const QuadInt& a, const QuadInt& b) const {
    if (b.is_zero()) return a.is_zero();
    QuadInt t = mul(a, conj(b));
    Int n = norm(b);
    return t.x % n == 0 && t.y % n == 0;
}

QuadInt Field::div_exact(const QuadInt& a, const QuadInt& b) const {
    if (b.is_zero()) throw InvalidInput("div_exact: division by zero");
    QuadInt t = mul(a, conj(b));
    Int n = norm(b);
    if (t.x % n != 0 || t.y % n != 0) throw InvalidInput("div_exact: not divisible");
    return {t.x / n, t.y / n};
}

namespace {
// round p/q to a nearest integer, q > 0
Int round_div(const Int& p, const Int& q) {
    Int num = 2 * p + q, den = 2 * q;
    Int f = num / den;
    if (num % den != 0 && num < 0) f -= 1;  // floor
    return f;
}
}  // namespace

QuadInt Field::euclid_gcd(QuadInt a, QuadInt b) const {
    while (!b.is_zero()) {
        QuadInt t = mul(a, conj(b));
        Int n = norm(b);
        if (n < 0) {
            t = -t;
            n = -n;
        }
        QuadInt q0{round_div(t.x, n), round_div(t.y, n)};
        Int nb = abs(norm(b));
        bool found = false;
        QuadInt best;
        for (int dx = -1; dx <= 1 && !found; ++dx)
            for (int dy = -1; dy <= 1 && !found; ++dy) {
                QuadInt q{q0.x + dx, q0.y + dy};
                QuadInt r = a - mul(b, q);
                if (abs(norm(r)) < nb) {
                    best = r;
                    found = true;
                }
            }
        if (!found) throw InvalidInput("euclid_gcd: no norm-reducing remainder");
        a = b;
        b = best;
    }
    return a;
}

std::optional<QuadInt> Field::canonical_tp_associate(const QuadInt& z) const {
    if (z.is_zero()) return std::nullopt;
    int s0 = embed_sign(z, 0), s1 = embed_sign(z, 1);
    QuadInt w;
    if (s0 > 0 && s1 > 0)
        w = z;
    else if (s0 < 0 && s1 < 0)
        w = -z;
    else if (id_ == FieldId::Q17) {
        // eps0 has embeddings (+,-): multiplying flips the second sign
        QuadInt t = mul(z, eps0_);
        w = embed_sign(t, 0) > 0 ? t : -t;
    } else {
        return std::nullopt;
    }
    const QuadInt& u = tp_unit_gen_;
    QuadInt uinv = unit_inverse(u);
    // w1/w2 >= 1  iff  y >= 0 (w totally positive)
    while (w.y < 0) w = mul(w, u);
    // w1/w2 < u1/u2  iff  s = u*conj(w) has s1 - s2 > 0, i.e. s.y > 0
    while (mul(u, conj(w)).y <= 0) w = mul(w, uinv);
    while (w.y < 0) w = mul(w, u);
    return w;
}

QuadInt Field::canonical_associate(const QuadInt& z) const {
    if (z.is_zero()) throw InvalidInput("canonical_associate: zero");
    QuadInt w = embed_sign(z, 0) > 0 ? z : -z;
    QuadInt einv = unit_inverse(eps0_);
    auto ratio_ge_1 = [&](const QuadInt& v) {
        // |v1| >= |v2|  iff  (v1+v2)(v1-v2) >= 0  iff  sgn(trace)*sgn(y) >= 0
        return sgn(trace(v)) * sgn(v.y) >= 0;
    };
    auto ratio_lt_r0 = [&](const QuadInt& v) {
        // |v1/v2| < |e1/e2|  iff  s = v*conj(eps0) has s1^2 < s2^2
        QuadInt s = mul(v, conj(eps0_));
        return sgn(trace(s)) * sgn(s.y) < 0;
    };
    while (!ratio_ge_1(w)) w = mul(w, eps0_);
    while (!ratio_lt_r0(w)) w = mul(w, einv);
    while (!ratio_ge_1(w)) w = mul(w, eps0_);
    if (embed_sign(w, 0) < 0) w = -w;
    return w;
}

long Field::tp_unit_log(const QuadInt& u) const {
    if (norm(u) != 1 || !is_totally_positive(u))
        throw InvalidInput("tp_unit_log: not a totally positive unit");
    const QuadInt& g = tp_unit_gen_;
    QuadInt ginv = unit_inverse(g);
    QuadInt w = u;
    long k = 0;
    while (!(w.x == 1 && w.y == 0)) {
        if (w.y > 0) {
            w = mul(w, ginv);
            ++k;
        } else {
            w = mul(w, g);
            --k;
        }
        if (k > 100000 || k < -100000) throw InvalidInput("tp_unit_log: no convergence");
    }
    return k;
}

QuadInt Field::parse(const std::string& s) const {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidInput("element syntax is a,b: " + s);
    try {
        Int a(s.substr(0, comma));
        Int b(s.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw InvalidInput("element syntax is a,b: " + s);
    }
}

std::string Field::format(const QuadInt& z) const {
    std::ostringstream os;
    const char* gen = id_ == FieldId::Q3 ? "sqrt3" : "w";
    os << z.x;
    if (z.y != 0) {
        os << (z.y > 0 ? "+" : "-");
        Int a = abs(z.y);
        if (a != 1) os << a << "*";
        os << gen;
    }
    return os.str();
}

}  // namespace quadsq
