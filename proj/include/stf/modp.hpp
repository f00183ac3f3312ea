#pragma once

// Arithmetic mod an odd prime p < 2^62. All functions here are pure and
// thread-safe; widening through unsigned __int128 keeps every product exact.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

namespace stf {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Modulus context. Caller passes primes; primality is not rechecked.
struct PrimeField {
    u64 p;   // odd prime, 3 <= p < 2^62
    u64 n;   // (p-1)/2
    u64 s;   // odd part of p-1
    int v;   // 2-adic valuation of p-1

    explicit PrimeField(u64 p_) : p(p_) {
        if (p < 3 || (p & 1) == 0 || p >= (u64(1) << 62))
            throw std::invalid_argument("PrimeField: need odd prime 3 <= p < 2^62");
        n = (p - 1) >> 1;
        u64 m = p - 1;
        v = 0;
        while ((m & 1) == 0) { m >>= 1; ++v; }
        s = m;
    }
};

inline u64 add_mod(u64 a, u64 b, u64 p) { u64 r = a + b; return r >= p ? r - p : r; }
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul_mod(u64 a, u64 b, u64 p) { return u64((u128)a * b % p); }

inline u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Reduce a signed value into [0, p).
inline u64 mod_signed(i64 a, u64 p) {
    i64 r = a % (i64)p;
    return r < 0 ? u64(r + (i64)p) : u64(r);
}

inline u64 inv_mod(u64 a, const PrimeField& F) {
    a %= F.p;
    if (a == 0) throw std::invalid_argument("inv_mod: zero");
    return pow_mod(a, F.p - 2, F.p);
}

// Legendre symbol via the binary Jacobi algorithm (no modular exponentiation,
// so the Euler-criterion agreement test is a genuine cross-check).
inline int legendre(u64 a, const PrimeField& F) {
    u64 m = a % F.p, n = F.p;
    int t = 1;
    while (m != 0) {
        while ((m & 1) == 0) {
            m >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(m, n);
        if ((m & 3) == 3 && (n & 3) == 3) t = -t;
        m %= n;
    }
    return n == 1 ? t : 0;
}

// Least alpha >= 2 with (alpha|p) = -1. Incremental search: the expected
// value of the result over primes is sum p_k/2^k = 3.674643966...
inline u64 find_nonresidue(const PrimeField& F) {
    for (u64 alpha = 2;; ++alpha)
        if (legendre(alpha, F) == -1) return alpha;
}

// Canonical square root in [0, (p-1)/2], or nullopt for a non-residue.
inline std::optional<u64> sqrt_tonelli_shanks(u64 a, const PrimeField& F) {
    const u64 p = F.p;
    a %= p;
    if (a == 0) return u64(0);
    if (legendre(a, F) != 1) return std::nullopt;
    u64 r;
    if ((p & 3) == 3) {
        r = pow_mod(a, (p + 1) >> 2, p);
    } else {
        // p-1 = 2^v s with s odd; walk the 2-Sylow discrete log down to zero.
        u64 g = pow_mod(find_nonresidue(F), F.s, p);
        r = pow_mod(a, (F.s + 1) >> 1, p);
        u64 t = pow_mod(a, F.s, p);
        int m = F.v;
        while (t != 1) {
            u64 t2 = t;
            int i = 0;
            while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
            u64 b = g;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            g = mul_mod(b, b, p);
            t = mul_mod(t, g, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

// Cipolla: find t with t^2 - a a non-residue, then (t + w)^((p+1)/2) in
// F_p[w]/(w^2 - (t^2-a)). The t search is randomized; the canonical result
// does not depend on the seed.
inline std::optional<u64> sqrt_cipolla(u64 a, const PrimeField& F, u64 seed = 0) {
    const u64 p = F.p;
    a %= p;
    if (a == 0) return u64(0);
    if (legendre(a, F) != 1) return std::nullopt;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (;;) {
        u64 t = rng() % p;
        u64 d = sub_mod(mul_mod(t, t, p), a, p);
        if (d == 0) return std::min(t, p - t);
        if (legendre(d, F) != -1) continue;
        u64 x0 = t, x1 = 1;   // t + w
        u64 r0 = 1, r1 = 0;
        u64 e = (p + 1) >> 1;
        while (e) {
            if (e & 1) {
                u64 n0 = add_mod(mul_mod(r0, x0, p), mul_mod(mul_mod(r1, x1, p), d, p), p);
                u64 n1 = add_mod(mul_mod(r0, x1, p), mul_mod(r1, x0, p), p);
                r0 = n0;
                r1 = n1;
            }
            u64 s0 = add_mod(mul_mod(x0, x0, p), mul_mod(mul_mod(x1, x1, p), d, p), p);
            u64 s1 = mul_mod(mul_mod(x0, x1, p), 2, p);
            x0 = s0;
            x1 = s1;
            e >>= 1;
        }
        return std::min(r0, p - r0);
    }
}

enum class SqrtAlgo { TonelliShanks, Cipolla };

inline std::optional<u64> sqrt_mod(u64 a, const PrimeField& F,
                                   SqrtAlgo algo = SqrtAlgo::TonelliShanks, u64 seed = 0) {
    return algo == SqrtAlgo::TonelliShanks ? sqrt_tonelli_shanks(a, F)
                                           : sqrt_cipolla(a, F, seed);
}

// a in (F_p*)^k, i.e. a^((p-1)/gcd(k,p-1)) = 1. Zero is a caller error.
inline bool kth_power_residue(u64 a, u64 k, const PrimeField& F) {
    a %= F.p;
    if (a == 0) throw std::invalid_argument("kth_power_residue: zero");
    u64 g = std::gcd(k, F.p - 1);
    return pow_mod(a, (F.p - 1) / g, F.p) == 1;
}

// Exact floor(sqrt(x)) for x < 2^63.
inline u64 isqrt_u64(u64 x) {
    u64 r = (u64)std::sqrt((double)x);
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace stf
