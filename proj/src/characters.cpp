#include "quadsq/characters.hpp"

#include <array>

#include "modarith.hpp"
#include "quadsq/ideal.hpp"

namespace quadsq {

using detail::legendre;
using detail::sqrt_mod;

namespace {
int sgn(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
Int mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}
}  // namespace

int chi4(const Int& n) {
    Int r = mod(n, 4);
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

int chi4K(const Field& F, const QuadInt& nu) {
    Int n = F.norm(nu);
    if (n % 2 == 0) return 0;
    if (F.id() == FieldId::Q3) return sgn(n);
    return chi4(abs(n));
}

int rho2_element_q3(const QuadInt& nu) {
    Int n = nu.x * nu.x - 3 * nu.y * nu.y;
    if (n % 2 == 0) return 0;
    return nu.y % 2 == 0 ? 1 : -1;
}

int rho2_q17(const Field& F, const QuadInt& nu) {
    int c = chi4(nu.x);
    if (c == 0) return 0;
    return F.embed_sign(nu, 1) * c;
}

int rho2p_q17(const Field& F, const QuadInt& nu) {
    int c = chi4(nu.x + nu.y);
    if (c == 0) return 0;
    return F.embed_sign(nu, 0) * c;
}

int qr_symbol(const Field& F, const QuadInt& beta, const QuadInt& pi) {
    Int np = abs(F.norm(pi));
    if (np % 2 == 0) throw InvalidInput("qr_symbol: modulus must be an odd prime");
    if (F.divides(beta, pi)) return 0;
    const int d = F.id() == FieldId::Q3 ? 3 : 17;
    Int p = sqrt(np);
    if (p * p == np) {
        // inert prime: Euler's criterion in F_{p^2} = F_p[theta]
        Int e = (np - 1) / 2;
        std::array<Int, 2> r{1, 0}, b{mod(beta.x, p), mod(beta.y, p)};
        auto fmul = [&](const std::array<Int, 2>& u, const std::array<Int, 2>& v) {
            std::array<Int, 2> w;
            if (F.id() == FieldId::Q3) {
                w[0] = mod(u[0] * v[0] + 3 * u[1] * v[1], p);
                w[1] = mod(u[0] * v[1] + u[1] * v[0], p);
            } else {
                w[0] = mod(u[0] * v[0] + 4 * u[1] * v[1], p);
                w[1] = mod(u[0] * v[1] + u[1] * v[0] + u[1] * v[1], p);
            }
            return w;
        };
        while (e > 0) {
            if (e % 2 == 1) r = fmul(r, b);
            b = fmul(b, b);
            e /= 2;
        }
        if (r[1] != 0) throw InvalidInput("qr_symbol: modulus is not prime");
        if (r[0] == 1) return 1;
        if (r[0] == p - 1) return -1;
        throw InvalidInput("qr_symbol: modulus is not prime");
    }
    // degree one: reduce beta to Z/p via the residue of theta mod pi
    p = np;
    Int t;
    if (p == d) {
        t = F.id() == FieldId::Q3 ? Int(0) : mod(9, p);
    } else {
        Int s = sqrt_mod(d, p);
        std::array<Int, 2> cand;
        if (F.id() == FieldId::Q3)
            cand = {s, mod(-s, p)};
        else {
            Int inv2 = detail::powmod(2, p - 2, p);
            cand = {mod((1 + s) * inv2, p), mod((1 - s) * inv2, p)};
        }
        if (F.divides(QuadInt(cand[0], Int(-1)), pi))
            t = cand[0];
        else if (F.divides(QuadInt(cand[1], Int(-1)), pi))
            t = cand[1];
        else
            throw InvalidInput("qr_symbol: modulus is not prime");
    }
    Int val = mod(beta.x + beta.y * t, p);
    return legendre(val, p);
}

Case3 classify3(const Field& F, const QuadInt& alpha) {
    if (F.id() != FieldId::Q3) throw InvalidInput("classify3: wrong field");
    if (alpha.is_zero()) throw InvalidInput("classify3: zero element");
    if (!is_squarefree(F, alpha)) throw InvalidInput("classify3: (alpha) must be squarefree");
    bool xodd = alpha.x % 2 != 0, yodd = alpha.y % 2 != 0;
    if (!xodd && yodd) return Case3::C2;  // alpha = sqrt3 mod 2
    if (xodd && yodd) return Case3::D;    // alpha = 1+sqrt3 mod 2
    if (!xodd && !yodd) throw InvalidInput("classify3: (alpha) must be squarefree");
    if (mod(alpha.y, 4) == 2) return Case3::C1;
    // y = 0 mod 4: unique odd residue c mod 4*pi2
    QuadInt m4pi2 = F.mul(QuadInt(4, 0), F.pi2());
    int found = -1;
    for (int c : {1, 3, 5, 7}) {
        if (F.divides(alpha - QuadInt(c, 0), m4pi2)) {
            if (found != -1) throw InvalidInput("classify3: residue not unique");
            found = c;
        }
    }
    if (found == -1) throw InvalidInput("classify3: no residue class");
    return (found == 1 || found == 3) ? Case3::A : Case3::B;
}

std::pair<Case17, Case17> classify17(const Field& F, const QuadInt& alpha) {
    if (F.id() != FieldId::Q17) throw InvalidInput("classify17: wrong field");
    if (alpha.is_zero()) throw InvalidInput("classify17: zero element");
    if (!is_squarefree(F, alpha)) throw InvalidInput("classify17: (alpha) must be squarefree");
    auto at = [&](const QuadInt& q) -> Case17 {
        int v = valuation(F, alpha, q);
        if (v >= 2) throw InvalidInput("classify17: (alpha) must be squarefree");
        if (v == 1) return Case17::D;
        QuadInt q3 = F.mul(q, F.mul(q, q));
        int found = -1;
        for (int c : {1, 3, 5, 7}) {
            if (F.divides(alpha - QuadInt(c, 0), q3)) {
                if (found != -1) throw InvalidInput("classify17: residue not unique");
                found = c;
            }
        }
        switch (found) {
            case 1: return Case17::A;
            case 5: return Case17::B;
            case 7: return Case17::CA;
            case 3: return Case17::CB;
            default: throw InvalidInput("classify17: no residue class");
        }
    };
    return {at(F.pi2()), at(F.pi2p())};
}

Coarse17 coarse17(const Field& F, const QuadInt& alpha) {
    auto [c1, c2] = classify17(F, alpha);
    if (c1 == Case17::CA || c2 == Case17::CA) return Coarse17::Excluded;
    int nb = (c1 == Case17::CB ? 1 : 0) + (c2 == Case17::CB ? 1 : 0);
    if (nb == 2) return Coarse17::G;
    if (nb == 1) return Coarse17::F;
    return Coarse17::E;
}

const char* to_string(Case3 c) {
    switch (c) {
        case Case3::A: return "A";
        case Case3::B: return "B";
        case Case3::C1: return "C1";
        case Case3::C2: return "C2";
        case Case3::D: return "D";
    }
    return "?";
}

const char* to_string(Case17 c) {
    switch (c) {
        case Case17::A: return "A";
        case Case17::B: return "B";
        case Case17::CA: return "CA";
        case Case17::CB: return "CB";
        case Case17::D: return "D";
    }
    return "?";
}

const char* to_string(Coarse17 c) {
    switch (c) {
        case Coarse17::E: return "E";
        case Coarse17::F: return "F";
        case Coarse17::G: return "G";
        case Coarse17::Excluded: return "excluded";
    }
    return "?";
}

int psi_alpha(const Field& F, const QuadInt& alpha, const QuadInt& delta) {
    Factorization f = factor(F, delta);
    int out = 1;
    bool have_even_case = false;
    Case3 c3{};
    std::pair<Case17, Case17> c17{};
    for (const auto& [pi, e] : f.primes) {
        int v;
        if (abs(F.norm(pi)) % 2 == 0) {
            if (!have_even_case) {
                if (F.id() == FieldId::Q3)
                    c3 = classify3(F, alpha);
                else
                    c17 = classify17(F, alpha);
                have_even_case = true;
            }
            if (F.id() == FieldId::Q3) {
                v = c3 == Case3::A ? 1 : (c3 == Case3::B ? -1 : 0);
            } else {
                Case17 c = F.divides(pi, F.pi2()) ? c17.first : c17.second;
                v = c == Case17::A ? 1 : (c == Case17::B ? -1 : 0);
            }
        } else {
            v = qr_symbol(F, alpha, pi);
        }
        if (v == 0) return 0;
        if (v == -1 && e % 2 == 1) out = -out;
    }
    return out;
}

int Character::eval(const Field& F, const QuadInt& delta) const {
    switch (kind) {
        case Trivial:
            return 1;
        case Chi4K:
            return chi4K(F, delta);
        case Rho2:
            return rho2_q17(F, delta);
        case Rho2p:
            return rho2p_q17(F, delta);
        case OneOf:
            return F.is_unit(F.euclid_gcd(delta, arg)) ? 1 : 0;
        case PsiAlpha:
            return psi_alpha(F, arg, delta);
    }
    return 0;
}

Int sigma(const Field& F, int k1, const Character& psi, const Character& psip,
          const QuadInt& nu, const QuadInt& denom_scale) {
    QuadInt n = nu;
    if (!(denom_scale == QuadInt(1, 0))) {
        if (!F.divides(nu, denom_scale)) return 0;
        n = F.div_exact(nu, denom_scale);
    }
    if (n.is_zero()) throw InvalidInput("sigma: zero argument");
    if (!F.is_totally_positive(n)) return 0;
    Int acc = 0;
    for (const QuadInt& d : ideal_divisors(F, n)) {
        int a = psi.eval(F, d);
        if (a == 0) continue;
        int b = psip.eval(F, F.div_exact(n, d));
        if (b == 0) continue;
        Int term = a * b;
        if (k1 == 1) term *= abs(F.norm(d));
        acc += term;
    }
    return acc;
}

Int sigma_rho_pair(const Field& F, const QuadInt& nu) {
    if (F.id() == FieldId::Q3) {
        int r = rho2_element_q3(nu);
        if (r == 0) return 0;
        return r * sigma(F, 0, Character::chi4k(), Character::one_of(F.pi2()), nu);
    }
    return sigma(F, 0, Character::rho2(), Character::rho2p(), nu);
}

}  // namespace quadsq
