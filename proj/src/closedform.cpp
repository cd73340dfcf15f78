#include "quadsq/closedform.hpp"

#include <stdexcept>

#include "quadsq/ideal.hpp"
#include "quadsq/repcount.hpp"

namespace quadsq {

namespace {

Int mod4(const Int& v) {
    Int r = v % 4;
    if (r < 0) r += 4;
    return r;
}

Int sigma1_plain(const Field& F, const QuadInt& w) {
    return sigma(F, 1, Character::trivial(), Character::trivial(), w);
}

Int sigma1_coprime2(const Field& F, const QuadInt& w) {
    QuadInt m = F.id() == FieldId::Q3 ? F.pi2() : QuadInt(2, 0);
    return sigma(F, 1, Character::one_of(m), Character::trivial(), w);
}

// weight-two divisor combination attached to the case of alpha
Rat case_weight3(const Field& F, Case3 c, const QuadInt& w) {
    Int s = sigma1_plain(F, w), t = sigma1_coprime2(F, w);
    switch (c) {
        case Case3::A: return Rat(3 * s + t);
        case Case3::B: return Rat(s + t);
        case Case3::C1: return Rat(s);
        case Case3::C2:
        case Case3::D: return Rat(s - t) / 2;
    }
    return 0;
}

bool is_three_times_unit(const Field& F, const QuadInt& alpha) {
    if (!F.divides(alpha, QuadInt(3, 0))) return false;
    return F.is_unit(F.div_exact(alpha, QuadInt(3, 0)));
}

struct LiftShape {
    std::string label;  // case label of alpha
    long h;
    Rat prefactor;  // coefficient in front of the divisor combination
    Case3 c3;       // Q3 only
};

LiftShape lift_shape(const Field& F, const QuadInt& alpha) {
    ClassNumberResult cn = class_number(F, alpha);
    LiftShape out;
    out.label = cn.case_label;
    out.h = cn.h;
    if (F.id() == FieldId::Q3) {
        out.c3 = classify3(F, alpha);
        Rat lf;
        if (F.is_unit(alpha))
            lf = F.tp_unit_log(alpha) % 2 == 0 ? Rat(cn.h, 36) : Rat(cn.h, 6);
        else
            lf = Rat(cn.h, 3);
        out.prefactor = Rat(36) * lf;
    } else {
        Coarse17 co = coarse17(F, alpha);
        int c = co == Coarse17::E ? 1 : (co == Coarse17::F ? 2 : 4);
        Rat lf;
        if (F.is_unit(alpha))
            lf = Rat(2 * cn.h);
        else if (is_three_times_unit(F, alpha))
            lf = Rat(4 * cn.h, 3);
        else
            lf = Rat(4 * cn.h);
        out.prefactor = Rat(3, 2) * c * lf;
    }
    return out;
}

void check_narrow_scope3(const Field& F, const QuadInt& nu) {
    if (F.id() != FieldId::Q3) return;
    for (const auto& [pi, e] : factor(F, nu).primes)
        if (!F.canonical_tp_associate(pi))
            throw InvalidInput("r3 formula: a prime factor of nu has no totally positive generator");
}

}  // namespace

Int r2_closed(const Field& F, const QuadInt& nu) {
    if (!F.is_totally_positive(nu)) throw InvalidInput("r2_closed: nu must be totally positive");
    if (F.id() == FieldId::Q3) {
        Int s = sigma(F, 0, Character::chi4k(), Character::trivial(), nu);
        Int t = sigma(F, 0, Character::chi4k(), Character::one_of(F.pi2()), nu);
        Int t2 = sigma(F, 0, Character::chi4k(), Character::one_of(F.pi2()), nu, QuadInt(2, 0));
        int r = rho2_element_q3(nu);
        return 2 * (6 * s + (r - 5) * t - 4 * t2);
    }
    Int s = sigma(F, 0, Character::chi4k(), Character::trivial(), nu);
    return 2 * s + 2 * sigma_rho_pair(F, nu);
}

R2Criterion r2_criterion(const Field& F, const QuadInt& nu) {
    if (!F.is_totally_positive(nu)) throw InvalidInput("r2_criterion: nu must be totally positive");
    Factorization f = factor(F, nu);
    if (F.id() == FieldId::Q3) {
        int e2 = 0;
        Int mprod = 1;
        bool neg_even = true;
        QuadInt used(1, 0);
        for (const auto& [pi, e] : f.primes) {
            Int n = F.norm(pi);
            if (abs(n) == 2) {
                e2 = e;
                for (int i = 0; i < e; ++i) used = F.mul(used, pi);
            } else if (n > 0) {
                QuadInt w = *F.canonical_tp_associate(pi);
                if (w.y % 2 != 0) w = F.mul(w, F.eps0());
                mprod *= 1 + e;
                for (int i = 0; i < e; ++i) used = F.mul(used, w);
            } else {
                if (e % 2 != 0) neg_even = false;
                for (int i = 0; i < e; ++i) used = F.mul(used, pi);
            }
        }
        bool rep = false;
        if (neg_even) {
            if (e2 == 0) {
                long k = F.tp_unit_log(F.div_exact(nu, used));
                rep = k % 2 == 0;
            } else {
                rep = e2 % 2 == 0;
            }
        }
        if (!rep) return {false, 0};
        return {true, (e2 >= 4 ? 12 : 4) * mprod};
    }
    long ssum = 0;
    Int prod = 1;
    bool c_even = true;
    for (const auto& [pi, e] : f.primes) {
        Int n = F.norm(pi);
        if (abs(n) == 2) {
            ssum += e;
            continue;
        }
        Int xm = mod4(pi.x), ym = mod4(pi.y);
        if (ym == 0 && xm == 1)
            prod *= 1 + e;
        else if (ym == 0 && xm == 3) {
            prod *= 1 + e;
            ssum += e;
        } else if (ym == 2) {
            if (e % 2 != 0) c_even = false;
        } else
            throw InvalidInput("r2_criterion: unexpected residue class of a prime");
    }
    if (!c_even || ssum % 2 != 0) return {false, 0};
    return {true, 4 * prod};
}

bool representable3(const Field& F, const QuadInt& nu) {
    if (!F.is_totally_positive(nu)) throw InvalidInput("representable3: nu must be totally positive");
    if (F.id() == FieldId::Q3) return nu.y % 2 == 0;
    const QuadInt& p = F.pi2();
    const QuadInt& q = F.pi2p();
    QuadInt p3 = F.mul(p, F.mul(p, p)), q3 = F.mul(q, F.mul(q, q));
    int v = valuation(F, nu, p), vp = valuation(F, nu, q);
    QuadInt p2 = F.mul(p, p), q2 = F.mul(q, q);
    QuadInt base = nu;
    for (int e = 0; 2 * e <= v; ++e) {
        QuadInt mu = base;
        for (int ep = 0; 2 * ep <= vp; ++ep) {
            if (F.divides(mu - QuadInt(7, 0), p3) || F.divides(mu - QuadInt(7, 0), q3))
                return false;
            if (2 * (ep + 1) <= vp) mu = F.div_exact(mu, q2);
        }
        if (2 * (e + 1) <= v) base = F.div_exact(base, p2);
    }
    return true;
}

Int r3_closed(const Field& F, const QuadInt& alpha, const QuadInt& nu) {
    if (!F.is_totally_positive(alpha) || !F.is_totally_positive(nu))
        throw InvalidInput("r3_closed: arguments must be totally positive");
    if (F.id() == FieldId::Q17 && coarse17(F, alpha) == Coarse17::Excluded) return 0;
    check_narrow_scope3(F, nu);
    LiftShape sh = lift_shape(F, alpha);
    QuadInt m = F.id() == FieldId::Q3 ? F.pi2() : QuadInt(2, 0);
    QuadInt malpha = -alpha;
    Rat acc = 0;
    for (const QuadInt& d : ideal_divisors(F, nu)) {
        int mu = mobius(F, d);
        if (mu == 0) continue;
        if (!F.is_unit(F.euclid_gcd(d, m))) continue;
        int pa = psi_alpha(F, malpha, d);
        if (pa == 0) continue;
        QuadInt w = F.div_exact(nu, d);
        Rat wt = F.id() == FieldId::Q3 ? case_weight3(F, sh.c3, w) : Rat(sigma1_coprime2(F, w));
        acc += Rat(mu * pa) * wt;
    }
    Rat total = sh.prefactor * acc;
    if (denominator(total) != 1)
        throw std::logic_error("r3_closed: non-integral value");
    return numerator(total);
}

ClassNumberResult class_number(const Field& F, const QuadInt& alpha) {
    if (!F.is_totally_positive(alpha))
        throw InvalidInput("class_number: alpha must be totally positive");
    if (!is_squarefree(F, alpha)) throw InvalidInput("class_number: (alpha) must be squarefree");
    ClassNumberResult out;
    out.alpha = alpha;
    out.special = false;
    if (F.id() == FieldId::Q3) {
        Case3 c = classify3(F, alpha);
        out.case_label = to_string(c);
        bool four = c == Case3::C2 || c == Case3::D;
        out.r3_used = four ? r3_brute(F, F.mul(QuadInt(4, 0), alpha)) : r3_brute(F, alpha);
        if (F.is_unit(alpha)) {
            out.special = true;
            out.h = F.tp_unit_log(alpha) % 2 == 0 ? 1 : 2;
            return out;
        }
        Int denom;
        switch (c) {
            case Case3::A: denom = 48; break;
            case Case3::B: denom = 24; break;
            case Case3::C1: denom = 12; break;
            default: denom = 36; break;
        }
        if (out.r3_used % denom != 0 || out.r3_used == 0)
            throw std::logic_error("class_number: three-square count not a multiple of the case constant");
        out.h = (out.r3_used / denom).convert_to<long>();
        return out;
    }
    Coarse17 co = coarse17(F, alpha);
    if (co == Coarse17::Excluded)
        throw InvalidInput("class_number: no formula for alpha = 7 mod a cube of a prime above 2");
    out.case_label = to_string(co);
    out.r3_used = r3_brute(F, alpha);
    if (F.is_unit(alpha)) {
        out.special = true;
        out.h = 2;
        return out;
    }
    if (is_three_times_unit(F, alpha)) {
        out.special = true;
        out.h = 1;
        return out;
    }
    Int denom = co == Coarse17::E ? 6 : (co == Coarse17::F ? 12 : 24);
    if (out.r3_used % denom != 0 || out.r3_used == 0)
        throw std::logic_error("class_number: three-square count not a multiple of the case constant");
    out.h = (out.r3_used / denom).convert_to<long>();
    return out;
}

std::pair<Rat, Rat> verify_cfc(const Field& F, const QuadInt& alpha, const QuadInt& nu) {
    if (!F.is_totally_positive(alpha) || !F.is_totally_positive(nu))
        throw InvalidInput("verify_cfc: arguments must be totally positive");
    check_narrow_scope3(F, nu);
    QuadInt m = F.id() == FieldId::Q3 ? F.pi2() : QuadInt(2, 0);
    QuadInt malpha = -alpha;
    Rat lhs = 0;
    for (const QuadInt& d : ideal_divisors(F, nu)) {
        if (!F.is_unit(F.euclid_gcd(d, m))) continue;
        int pa = psi_alpha(F, malpha, d);
        if (pa == 0) continue;
        QuadInt w = F.div_exact(nu, d);
        lhs += Rat(pa) * Rat(r3_brute(F, F.mul(alpha, F.mul(w, w))));
    }
    if (F.id() == FieldId::Q17 && coarse17(F, alpha) == Coarse17::Excluded)
        return {lhs, Rat(0)};
    LiftShape sh = lift_shape(F, alpha);
    Rat rhs = sh.prefactor * (F.id() == FieldId::Q3 ? case_weight3(F, sh.c3, nu)
                                                    : Rat(sigma1_coprime2(F, nu)));
    return {lhs, rhs};
}

}  // namespace quadsq
