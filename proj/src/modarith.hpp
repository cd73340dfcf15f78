#pragma once

#include "quadsq/field.hpp"

namespace quadsq::detail {

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    return boost::multiprecision::powm(b, e, m);
}

// Legendre symbol (a/p) for odd prime p
inline int legendre(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Tonelli-Shanks square root mod odd prime p; requires (a/p) = 1
inline Int sqrt_mod(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        long i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int e = Int(1) << static_cast<unsigned long>((m - i - 1).convert_to<long>());
        Int b = powmod(c, e, p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace quadsq::detail
