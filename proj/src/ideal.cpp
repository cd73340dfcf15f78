#include "quadsq/ideal.hpp"

#include <algorithm>

#include "modarith.hpp"

namespace quadsq {

using detail::legendre;
using detail::powmod;
using detail::sqrt_mod;

namespace {

QuadInt prime_rep(const Field& F, const QuadInt& g) {
    auto tp = F.canonical_tp_associate(g);
    return tp ? *tp : F.canonical_associate(g);
}

}  // namespace

PrimeSplit rational_prime_split(const Field& F, const Int& p) {
    if (p < 2) throw InvalidInput("rational_prime_split: p must be prime");
    const int d = F.id() == FieldId::Q3 ? 3 : 17;
    if (p == 2) {
        if (F.id() == FieldId::Q3) return {SplitType::Ramified, prime_rep(F, F.pi2()), {}};
        return {SplitType::Split, prime_rep(F, F.pi2()), prime_rep(F, F.pi2p())};
    }
    if (p == d) {
        // (sqrt 3) resp. (sqrt 17) = (2*omega - 1)
        QuadInt g = F.id() == FieldId::Q3 ? QuadInt(0, 1) : QuadInt(-1, 2);
        return {SplitType::Ramified, prime_rep(F, g), {}};
    }
    if (legendre(d, p) == -1) return {SplitType::Inert, QuadInt(p, Int(0)), {}};
    Int s = sqrt_mod(d, p);
    Int r;
    if (F.id() == FieldId::Q3)
        r = s;
    else {
        // root of x^2 - x - 4: (1+s)/2 mod p
        Int inv2 = powmod(2, p - 2, p);
        r = (1 + s) * inv2 % p;
    }
    QuadInt g = F.euclid_gcd(QuadInt(p, Int(0)), QuadInt(r, Int(-1)));
    if (abs(F.norm(g)) != p) throw InvalidInput("rational_prime_split: gcd failed");
    return {SplitType::Split, prime_rep(F, g), prime_rep(F, F.conj(g))};
}

int valuation(const Field& F, const QuadInt& nu, const QuadInt& pi) {
    if (nu.is_zero()) throw InvalidInput("valuation: zero element");
    int e = 0;
    QuadInt w = nu;
    while (F.divides(w, pi)) {
        w = F.div_exact(w, pi);
        ++e;
        if (e > 4096) throw InvalidInput("valuation: runaway");
    }
    return e;
}

Factorization factor(const Field& F, const QuadInt& nu) {
    if (nu.is_zero()) throw InvalidInput("factor: zero element");
    Factorization out;
    Int n = abs(F.norm(nu));
    QuadInt rest = nu;
    std::vector<Int> ps;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    for (const Int& p : ps) {
        PrimeSplit sp = rational_prime_split(F, p);
        std::vector<QuadInt> gens{sp.pi};
        if (sp.type == SplitType::Split) gens.push_back(sp.pip);
        for (const QuadInt& g : gens) {
            int e = valuation(F, rest, g);
            if (e > 0) {
                out.primes.emplace_back(g, e);
                for (int i = 0; i < e; ++i) rest = F.div_exact(rest, g);
            }
        }
    }
    if (!F.is_unit(rest)) throw InvalidInput("factor: leftover non-unit");
    out.unit = rest;
    std::sort(out.primes.begin(), out.primes.end(), [&](const auto& a, const auto& b) {
        Int na = abs(F.norm(a.first)), nb = abs(F.norm(b.first));
        if (na != nb) return na < nb;
        if (a.first.x != b.first.x) return a.first.x < b.first.x;
        return a.first.y < b.first.y;
    });
    return out;
}

bool is_squarefree(const Field& F, const QuadInt& nu) {
    Factorization f = factor(F, nu);
    for (const auto& [p, e] : f.primes)
        if (e >= 2) return false;
    return true;
}

std::vector<QuadInt> ideal_divisors(const Field& F, const QuadInt& nu) {
    Factorization f = factor(F, nu);
    std::vector<QuadInt> out{QuadInt(1, 0)};
    for (const auto& [p, e] : f.primes) {
        std::vector<QuadInt> next;
        next.reserve(out.size() * (e + 1));
        for (const QuadInt& d : out) {
            QuadInt cur = d;
            next.push_back(cur);
            for (int i = 1; i <= e; ++i) {
                cur = F.mul(cur, p);
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<QuadInt> tp_divisors(const Field& F, const QuadInt& nu) {
    std::vector<QuadInt> out;
    for (const QuadInt& d : ideal_divisors(F, nu)) {
        auto tp = F.canonical_tp_associate(d);
        if (tp) out.push_back(*tp);
    }
    std::sort(out.begin(), out.end(), [&](const QuadInt& a, const QuadInt& b) {
        Int ta = F.trace(a), tb = F.trace(b);
        if (ta != tb) return ta < tb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return out;
}

int mobius(const Field& F, const QuadInt& nu) {
    Factorization f = factor(F, nu);
    for (const auto& [p, e] : f.primes)
        if (e >= 2) return 0;
    return f.primes.size() % 2 == 0 ? 1 : -1;
}

std::pair<QuadInt, QuadInt> squarefree_decompose(const Field& F, const QuadInt& nu) {
    if (!F.is_totally_positive(nu))
        throw InvalidInput("squarefree_decompose: input must be totally positive");
    Factorization f = factor(F, nu);
    QuadInt mu(1, 0);
    for (const auto& [p, e] : f.primes)
        for (int i = 0; i < e / 2; ++i) mu = F.mul(mu, p);
    QuadInt alpha = F.div_exact(nu, F.mul(mu, mu));
    return {alpha, mu};
}

}  // namespace quadsq
