#pragma once

// Slow reference implementations, independent of every fast path. They call
// nothing outside modp.hpp and exist to pin expected values in tests and to
// serve the small primes where the centered lift is not unique.

#include "stf/modp.hpp"

#include <array>
#include <vector>

namespace stf {

// y^2 = f(x) with f stored low-to-high; coeff.back() != 0 mod p.
struct AffineModel {
    std::vector<u64> coeff;
    int degree() const { return (int)coeff.size() - 1; }
    u64 eval(u64 x, u64 p) const {
        u64 acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
            acc = add_mod(mul_mod(acc, x, p), *it % p, p);
        return acc;
    }
};

// Point count of the smooth projective model: sum_x (1 + chi(f(x))) plus
// one point at infinity for odd degree, 1 + chi(leading coeff) for even.
// Oracle scale: p < 2^24.
u64 naive_count(const AffineModel& f, const PrimeField& F);

// binom(n, r) mod p as a length-r falling-factorial product. Requires n < p.
u64 naive_binom_mod(u64 n, u64 r, const PrimeField& F);

// [coeff of x^{ip-j} in f^((p-1)/2)]_{i,j=1..3} by repeated schoolbook
// polynomial multiplication. Oracle scale: p < 2^14.
std::array<std::array<u64, 3>, 3> naive_hasse_witt(const AffineModel& f, const PrimeField& F);

// p + 1 - naive_count, as a plain integer (no Weil-bound lift involved).
i64 naive_trace(const AffineModel& f, const PrimeField& F);

} // namespace stf
