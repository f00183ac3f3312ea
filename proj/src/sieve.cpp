#include "stf/sieve.hpp"

namespace stf {

std::vector<u64> sieve_segment(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi <= 2 || hi <= lo) return out;
    if (lo < 2) lo = 2;
    u64 root = isqrt_u64(hi - 1);
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 q = 2; q <= root; ++q) {
        if (!small[q]) continue;
        base.push_back(q);
        for (u64 m = q * q; m <= root; m += q) small[m] = 0;
    }
    std::vector<char> seg(hi - lo, 1);
    for (u64 q : base) {
        u64 start = q * q;
        if (start < lo) start = ((lo + q - 1) / q) * q;
        for (u64 m = start; m < hi; m += q) seg[m - lo] = 0;
    }
    for (u64 v = lo; v < hi; ++v)
        if (seg[v - lo]) out.push_back(v);
    return out;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // these twelve bases decide primality for every 64-bit n
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

} // namespace stf
