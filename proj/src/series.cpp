#include "quadsq/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "quadsq/closedform.hpp"
#include "quadsq/ideal.hpp"
#include "quadsq/repcount.hpp"

namespace quadsq {

Rat FourierSeries::at(const QuadInt& nu) const {
    auto it = coeffs.find({nu.x, nu.y});
    return it == coeffs.end() ? Rat(0) : it->second;
}

void FourierSeries::set(const QuadInt& nu, const Rat& c) {
    if (c == 0)
        coeffs.erase({nu.x, nu.y});
    else
        coeffs[{nu.x, nu.y}] = c;
}

std::vector<QuadInt> tp_elements_upto(const Field& F, long T) {
    std::vector<QuadInt> out;
    for (long t = 1; t <= T; ++t) {
        if (F.id() == FieldId::Q3) {
            if (t % 2 != 0) continue;
            long x = t / 2;
            for (long y = -x; y <= x; ++y)
                if (3 * y * y < x * x) out.emplace_back(x, y);
        } else {
            for (long y = -t; y <= t; ++y) {
                if ((t - y) % 2 != 0) continue;
                QuadInt nu((t - y) / 2, y);
                if (F.is_totally_positive(nu)) out.push_back(nu);
            }
        }
    }
    return out;
}

FourierSeries theta(const Field& F, long T) {
    FourierSeries f;
    f.F = &F;
    f.T = T;
    f.constant = 1;  // x = 0
    double rt = std::sqrt(static_cast<double>(T));
    long bmax, amax;
    if (F.id() == FieldId::Q3) {
        amax = static_cast<long>(rt / std::sqrt(2.0)) + 2;
        bmax = static_cast<long>(rt / std::sqrt(6.0)) + 2;
    } else {
        bmax = static_cast<long>(2 * rt / std::sqrt(17.0)) + 2;
        amax = static_cast<long>(rt) + bmax + 2;
    }
    for (long a = -amax; a <= amax; ++a) {
        for (long b = -bmax; b <= bmax; ++b) {
            QuadInt x(a, b);
            if (x.is_zero()) continue;
            QuadInt sq = F.mul(x, x);
            if (F.trace(sq) > T) continue;
            f.coeffs[{sq.x, sq.y}] += 1;
        }
    }
    return f;
}

namespace {

struct EisSpec {
    int k1;  // norm exponent in the divisor sum
    Character psi, psip;
    QuadInt denom{1, 0};
    bool pair = false;  // use the rho-pair kernel
    Rat constant;
};

EisSpec eis_spec(const Field& F, EisSeries s) {
    bool q3 = F.id() == FieldId::Q3;
    auto t = Character::trivial();
    switch (s) {
        case EisSeries::G1Chi:
            return {0, Character::chi4k(), t, {1, 0}, false, q3 ? Rat(1, 3) : Rat(2)};
        case EisSeries::G1ChiOne:
            if (!q3) break;
            return {0, Character::chi4k(), Character::one_of(F.pi2()), {1, 0}, false, 0};
        case EisSeries::G1ChiOneHalf:
            if (!q3) break;
            return {0, Character::chi4k(), Character::one_of(F.pi2()), {2, 0}, false, 0};
        case EisSeries::G1Pair:
            return {0, t, t, {1, 0}, true, 0};
        case EisSeries::G2:
            return {1, t, t, {1, 0}, false, q3 ? Rat(1, 6) : Rat(1, 3)};
        case EisSeries::G2OneP2:
            return {1, Character::one_of(F.pi2()), t, {1, 0}, false, q3 ? Rat(-1, 6) : Rat(-1, 3)};
        case EisSeries::G2OneP2p:
            if (q3) break;
            return {1, Character::one_of(F.pi2p()), t, {1, 0}, false, Rat(-1, 3)};
        case EisSeries::G2One2:
            if (q3) break;
            return {1, Character::one_of(QuadInt(2, 0)), t, {1, 0}, false, Rat(1, 3)};
    }
    throw InvalidInput("eisenstein: series not instantiated over this field");
}

}  // namespace

FourierSeries eisenstein(const Field& F, EisSeries s, long T) {
    EisSpec sp = eis_spec(F, s);
    FourierSeries f;
    f.F = &F;
    f.T = T;
    f.constant = sp.constant;
    for (const QuadInt& nu : tp_elements_upto(F, T)) {
        Int c = sp.pair ? sigma_rho_pair(F, nu)
                        : sigma(F, sp.k1, sp.psi, sp.psip, nu, sp.denom);
        if (c != 0) f.coeffs[{nu.x, nu.y}] = Rat(4 * c);
    }
    return f;
}

FourierSeries eisenstein(const Field& F, int k, const Character& psi,
                         const Character& psip, const QuadInt& denom_scale, long T) {
    bool half = denom_scale == QuadInt(2, 0);
    if (!half && !(denom_scale == QuadInt(1, 0)))
        throw InvalidInput("eisenstein: unsupported scaling");
    using K = Character::Kind;
    if (k == 1 && psi.kind == K::Chi4K && psip.kind == K::Trivial && !half)
        return eisenstein(F, EisSeries::G1Chi, T);
    if (k == 1 && psi.kind == K::Chi4K && psip.kind == K::OneOf)
        return eisenstein(F, half ? EisSeries::G1ChiOneHalf : EisSeries::G1ChiOne, T);
    if (k == 1 && psi.kind == K::Rho2 && psip.kind == K::Rho2p && !half)
        return eisenstein(F, EisSeries::G1Pair, T);
    if (k == 2 && !half && psip.kind == K::Trivial) {
        if (psi.kind == K::Trivial) return eisenstein(F, EisSeries::G2, T);
        if (psi.kind == K::OneOf) {
            if (psi.arg == QuadInt(2, 0)) return eisenstein(F, EisSeries::G2One2, T);
            if (psi.arg == F.pi2()) return eisenstein(F, EisSeries::G2OneP2, T);
            if (F.two_splits() && psi.arg == F.pi2p())
                return eisenstein(F, EisSeries::G2OneP2p, T);
        }
    }
    throw InvalidInput("eisenstein: unsupported character pair");
}

FourierSeries series_add(const FourierSeries& a, const FourierSeries& b) {
    FourierSeries f;
    f.F = a.F;
    f.T = std::min(a.T, b.T);
    f.constant = a.constant + b.constant;
    f.constant_known = a.constant_known && b.constant_known;
    f.coeffs = a.coeffs;
    for (const auto& [k, c] : b.coeffs) {
        f.coeffs[k] += c;
        if (f.coeffs[k] == 0) f.coeffs.erase(k);
    }
    // drop anything beyond the common bound
    for (auto it = f.coeffs.begin(); it != f.coeffs.end();) {
        QuadInt nu(it->first.first, it->first.second);
        if (f.F->trace(nu) > f.T)
            it = f.coeffs.erase(it);
        else
            ++it;
    }
    return f;
}

FourierSeries series_scale(const Rat& c, const FourierSeries& f) {
    FourierSeries g = f;
    g.constant *= c;
    if (c == 0) {
        g.coeffs.clear();
        return g;
    }
    for (auto& [k, v] : g.coeffs) v *= c;
    return g;
}

FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b) {
    FourierSeries f;
    f.F = a.F;
    f.T = std::min(a.T, b.T);
    f.constant = a.constant * b.constant;
    f.constant_known = a.constant_known && b.constant_known;
    const Field& F = *f.F;
    for (const auto& [ka, ca] : a.coeffs) {
        QuadInt mu(ka.first, ka.second);
        long ta = static_cast<long>(F.trace(mu).convert_to<long>());
        if (ta > f.T) continue;
        if (b.constant != 0) f.coeffs[ka] += ca * b.constant;
        for (const auto& [kb, cb] : b.coeffs) {
            QuadInt nu(kb.first, kb.second);
            long tb = static_cast<long>(F.trace(nu).convert_to<long>());
            if (ta + tb > f.T) continue;
            QuadInt s = mu + nu;
            f.coeffs[{s.x, s.y}] += ca * cb;
        }
    }
    if (a.constant != 0)
        for (const auto& [kb, cb] : b.coeffs) {
            QuadInt nu(kb.first, kb.second);
            if (F.trace(nu) <= f.T) f.coeffs[kb] += a.constant * cb;
        }
    for (auto it = f.coeffs.begin(); it != f.coeffs.end();)
        it = it->second == 0 ? f.coeffs.erase(it) : std::next(it);
    return f;
}

FourierSeries u_op(const QuadInt& mu, const FourierSeries& f) {
    const Field& F = *f.F;
    if (!F.is_totally_positive(mu)) throw InvalidInput("u_op: mu must be totally positive");
    long M = 1;
    while (F.embed_sign(QuadInt(M, 0) - mu, 0) < 0 || F.embed_sign(QuadInt(M, 0) - mu, 1) < 0)
        ++M;
    FourierSeries g;
    g.F = &F;
    g.T = f.T / M;
    g.constant = f.constant;
    g.constant_known = f.constant_known;
    for (const QuadInt& nu : tp_elements_upto(F, g.T)) {
        Rat c = f.at(F.mul(mu, nu));
        if (c != 0) g.coeffs[{nu.x, nu.y}] = c;
    }
    return g;
}

FourierSeries dilate(long n, const FourierSeries& f) {
    FourierSeries g;
    g.F = f.F;
    g.T = n * f.T;
    g.constant = f.constant;
    g.constant_known = f.constant_known;
    for (const auto& [k, c] : f.coeffs) g.coeffs[{n * k.first, n * k.second}] = c;
    return g;
}

FourierSeries build_pefe3(const Field& F, long T) {
    return series_scale(Rat(1, 16), series_mul(eisenstein(F, EisSeries::G1ChiOne, T),
                                               eisenstein(F, EisSeries::G1Pair, T)));
}

FourierSeries build_xi3(const Field& F, long T) {
    return u_op(QuadInt(2, 0), build_pefe3(F, 2 * T));
}

FourierSeries build_phi17(const Field& F, long T) {
    return series_scale(Rat(1, 8), series_mul(eisenstein(F, EisSeries::G1Chi, T),
                                              eisenstein(F, EisSeries::G1Pair, T)));
}

FourierSeries build_xi17(const Field& F, long T) {
    return series_scale(Rat(1, 3), u_op(QuadInt(2, 0), build_phi17(F, 2 * T)));
}

VerifyReport verify_theta_sq(const Field& F, long T) {
    FourierSeries th = theta(F, T);
    FourierSeries lhs = series_mul(th, th);
    FourierSeries rhs;
    if (F.id() == FieldId::Q3) {
        rhs = series_add(
            series_add(series_scale(3, eisenstein(F, EisSeries::G1Chi, T)),
                       series_scale(Rat(-5, 2), eisenstein(F, EisSeries::G1ChiOne, T))),
            series_add(series_scale(-2, eisenstein(F, EisSeries::G1ChiOneHalf, T)),
                       series_scale(Rat(1, 2), eisenstein(F, EisSeries::G1Pair, T))));
    } else {
        rhs = series_add(series_scale(Rat(1, 2), eisenstein(F, EisSeries::G1Chi, T)),
                         series_scale(Rat(1, 2), eisenstein(F, EisSeries::G1Pair, T)));
    }
    VerifyReport rep;
    if (lhs.constant_known && rhs.constant_known) {
        rep.constant_checked = true;
        if (lhs.constant != rhs.constant) rep.mismatches.emplace_back(0, 0);
    }
    for (const QuadInt& nu : tp_elements_upto(F, T))
        if (lhs.at(nu) != rhs.at(nu)) rep.mismatches.push_back(nu);
    return rep;
}

VerifyReport verify_lift(const Field& F, const QuadInt& alpha, long T) {
    VerifyReport rep;
    std::vector<QuadInt> nus;
    std::vector<Rat> diffs;
    bool any = false;
    for (const QuadInt& nu : tp_elements_upto(F, T)) {
        if (F.id() == FieldId::Q3) {
            bool ok = true;
            for (const auto& [pi, e] : factor(F, nu).primes)
                if (!F.canonical_tp_associate(pi)) ok = false;
            if (!ok) continue;
        }
        auto [lhs, rhs] = verify_cfc(F, alpha, nu);
        nus.push_back(nu);
        diffs.push_back(lhs - rhs);
        if (lhs != rhs) {
            rep.mismatches.push_back(nu);
            any = true;
        }
    }
    if (any && F.id() == FieldId::Q3) {
        // try to explain the failure as a single multiple of the cusp form
        FourierSeries xi = build_xi3(F, T);
        Rat c = 0;
        bool fit = true, have = false;
        for (size_t i = 0; i < nus.size(); ++i) {
            Rat x = xi.at(nus[i]);
            if (!have && x != 0 && diffs[i] != 0) {
                c = diffs[i] / x;
                have = true;
            }
        }
        for (size_t i = 0; i < nus.size() && fit; ++i)
            if (diffs[i] != c * xi.at(nus[i])) fit = false;
        if (have && fit && c != 0) {
            rep.xi_fit = true;
            rep.xi_multiple = c;
        }
    }
    return rep;
}

std::string dump(const FourierSeries& f) {
    std::ostringstream os;
    if (f.constant_known) os << "0 0 0 " << f.constant << "\n";
    struct Row {
        long t;
        Int x, y;
        Rat c;
    };
    std::vector<Row> rows;
    for (const auto& [k, c] : f.coeffs) {
        QuadInt nu(k.first, k.second);
        rows.push_back({f.F->trace(nu).convert_to<long>(), k.first, k.second, c});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.t, a.x, a.y) < std::tie(b.t, b.x, b.y);
    });
    for (const Row& r : rows)
        os << r.t << " " << r.x << " " << r.y << " " << r.c << "\n";
    return os.str();
}

}  // namespace quadsq
