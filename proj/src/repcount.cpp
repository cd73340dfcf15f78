#include "quadsq/repcount.hpp"

#include <cmath>
#include <tuple>

namespace quadsq {

std::map<std::pair<Int, Int>, long> squares_upto(const Field& F, const QuadInt& bound) {
    std::map<std::pair<Int, Int>, long> out;
    if (F.embed_sign(bound, 0) < 0 || F.embed_sign(bound, 1) < 0) return out;
    double s1 = std::sqrt(std::max(0.0, F.embed(bound, 0)));
    double s2 = std::sqrt(std::max(0.0, F.embed(bound, 1)));
    long amax, bmax;
    if (F.id() == FieldId::Q3) {
        amax = static_cast<long>((s1 + s2) / 2) + 2;
        bmax = static_cast<long>((s1 + s2) / (2 * std::sqrt(3.0))) + 2;
    } else {
        amax = static_cast<long>((s1 + s2)) + 3;
        bmax = static_cast<long>((s1 + s2) / std::sqrt(17.0)) + 2;
    }
    for (long b = -bmax; b <= bmax; ++b) {
        for (long a = -amax; a <= amax; ++a) {
            QuadInt x(a, b);
            QuadInt sq = F.mul(x, x);
            if (!F.is_totally_nonneg(bound - sq)) continue;
            ++out[{sq.x, sq.y}];
        }
    }
    return out;
}

Int r2_brute(const Field& F, const QuadInt& nu) {
    if (F.embed_sign(nu, 0) < 0 || F.embed_sign(nu, 1) < 0) return 0;
    auto sq = squares_upto(F, nu);
    Int acc = 0;
    for (const auto& [k1, c1] : sq) {
        QuadInt rem = nu - QuadInt(k1.first, k1.second);
        auto it = sq.find({rem.x, rem.y});
        if (it != sq.end()) acc += Int(c1) * it->second;
    }
    return acc;
}

Int r3_brute(const Field& F, const QuadInt& nu) {
    if (F.embed_sign(nu, 0) < 0 || F.embed_sign(nu, 1) < 0) return 0;
    static std::map<std::tuple<int, Int, Int>, Int> cache;
    auto key = std::make_tuple(static_cast<int>(F.id()), nu.x, nu.y);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto sq = squares_upto(F, nu);
    Int acc = 0;
    for (const auto& [k1, c1] : sq) {
        QuadInt rem1 = nu - QuadInt(k1.first, k1.second);
        for (const auto& [k2, c2] : sq) {
            QuadInt rem2 = rem1 - QuadInt(k2.first, k2.second);
            if (F.embed_sign(rem2, 0) < 0 || F.embed_sign(rem2, 1) < 0) continue;
            auto it = sq.find({rem2.x, rem2.y});
            if (it != sq.end()) acc += Int(c1) * c2 * it->second;
        }
    }
    cache[key] = acc;
    return acc;
}

}  // namespace quadsq
