#pragma once

// Exact arithmetic modulo n. Moduli are capped at 32 bits so that products
// of two reduced residues always fit in uint64 without overflow; everything
// downstream (Howell forms, ring tables) relies on that bound.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace redmod {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 max_modulus = (u64{1} << 32) - 1;

inline void check_modulus(u64 n) {
    if (n < 2)
        throw std::invalid_argument("modulus must be >= 2");
    if (n > max_modulus)
        throw std::overflow_error("modulus exceeds the 32-bit overflow guard");
}

inline u64 addmod(u64 a, u64 b, u64 n) {
    u64 s = a + b;
    return s >= n ? s - n : s;
}

inline u64 submod(u64 a, u64 b, u64 n) { return a >= b ? a - b : a + (n - b); }

inline u64 negmod(u64 a, u64 n) { return a == 0 ? 0 : n - a; }

inline u64 mulmod(u64 a, u64 b, u64 n) { return (a * b) % n; }

inline u64 powmod(u64 a, u64 e, u64 n) {
    u64 r = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

struct Egcd {
    i64 g, s, t; // g = gcd(a,b) = s*a + t*b
};

inline Egcd egcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline u64 to_residue(i64 v, u64 n) {
    i64 m = v % static_cast<i64>(n);
    if (m < 0)
        m += static_cast<i64>(n);
    return static_cast<u64>(m);
}

// Inverse of a unit; throws when gcd(a, n) != 1.
inline u64 invmod(u64 a, u64 n) {
    Egcd e = egcd(static_cast<i64>(a % n), static_cast<i64>(n));
    if (e.g != 1)
        throw std::invalid_argument("invmod: " + std::to_string(a) +
                                    " is not a unit mod " + std::to_string(n));
    return to_residue(e.s, n);
}

// A unit u with u*a == gcd(a, n) (mod n). Used to normalise Howell pivots.
inline u64 unit_lifting(u64 a, u64 n) {
    a %= n;
    if (a == 0)
        return 1;
    u64 g = std::gcd(a, n);
    u64 m = n / g; // >= 2 since a != 0
    u64 c = invmod((a / g) % m, m);
    // lift c to a unit mod n along the residue class c + k*m
    for (u64 k = 0;; ++k) {
        u64 u = (c + k * m) % n;
        if (std::gcd(u == 0 ? n : u, n) == 1)
            return u;
        if (k > g)
            throw std::logic_error("unit_lifting: no unit found (bug)");
    }
}

// CRT for pairwise coprime moduli; result is a residue mod the product.
inline u64 crt_combine(const std::vector<std::pair<u64, u64>>& congruences) {
    u64 mod = 1, val = 0;
    for (auto [r, m] : congruences) {
        if (m == 0)
            throw std::invalid_argument("crt: zero modulus");
        if (std::gcd(mod, m) != 1)
            throw std::invalid_argument("crt: moduli are not coprime");
        if (mod > max_modulus / m)
            throw std::overflow_error("crt: combined modulus too large");
        u64 newmod = mod * m;
        // x = val + mod * t with mod*t == r - val (mod m)
        u64 rhs = submod(r % m, val % m, m);
        u64 t = mulmod(rhs, invmod(mod % m, m), m);
        val = val + mod * t;
        mod = newmod;
    }
    return val % mod;
}

inline bool is_prime_u64(u64 p) {
    if (p < 2)
        return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fs.emplace_back(d, e);
        }
    }
    if (n > 1)
        fs.emplace_back(n, 1);
    return fs;
}

inline u64 lcm_checked(u64 a, u64 b) {
    u64 g = std::gcd(a, b);
    u64 q = a / g;
    if (q > max_modulus / b)
        throw std::overflow_error("lcm exceeds modulus bound");
    return q * b;
}

inline u64 checked_mul_u64(u64 a, u64 b, const char* what) {
    if (b != 0 && a > UINT64_MAX / b)
        throw std::overflow_error(what);
    return a * b;
}

} // namespace redmod
