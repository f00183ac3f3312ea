#pragma once

// Frobenius traces for the genus-3 families
//   C1: y^2 = x^8 + c      (two-term f = x^8 + c,  d=8, e=0)
//   C2: y^2 = x^7 - c x    (two-term f = x^7 - cx, d=7, e=1)
// For two-term f = a x^d + b x^e the coefficient of x^{en+(d-e)r} in f^n is
// binom(n,r) a^r b^{n-r}, so each Cartier-Manin matrix row has at most one
// nonzero entry and the trace reduces to central binomials mod p. Those come
// from quadratic-form identities instead of factorial products, which is what
// makes a single prime quasi-quadratic in log p.

#include "stf/cornacchia.hpp"
#include "stf/modp.hpp"

#include <array>
#include <optional>

namespace stf {

enum class Family { C1, C2 };

struct CurveFamily {
    Family fam;
    i64 c_num;
    i64 c_den;
};

// Validates c != 0, reduces the fraction, normalizes den > 0.
CurveFamily make_family(Family fam, i64 c_num, i64 c_den = 1);

const char* family_name(Family fam);

// Good reduction: p odd, p coprime to c's numerator and denominator, and
// p > 3 except that p = 3 is good for C1.
bool good_prime(const CurveFamily& fam, u64 p);

// c mod p; throws if p divides the denominator.
u64 reduce_c(const CurveFamily& fam, const PrimeField& F);

struct TraceOptions {
    SqrtAlgo algo = SqrtAlgo::TonelliShanks;
    u64 seed = 0;
};

// Central binomial values mod p via two-squares / x^2+2y^2 representations:
//   p = 4m+1  = x^2 + y^2:   binom(2m, m) = 2 (-1)^(m+1) x
//   p = 8m+1  = x^2 + 2y^2:  binom(4m, m) = 2 (-1)^(m+1) x
//   p = 12m+1 = x^2 + y^2:   binom(6m, m) = 2 (-1)^(m+eps) x, eps = 0 iff 3 | x
// All with x = -(2|p) mod 4 (solve_form_normalized's convention).
u64 binom_half(const PrimeField& F, const TraceOptions& opt = {});    // p = 1 mod 4
u64 binom_quarter(const PrimeField& F, const TraceOptions& opt = {}); // p = 1 mod 8
u64 binom_sixth(const PrimeField& F, const TraceOptions& opt = {});   // p = 1 mod 12

// r with f^n_{ip-j} = binom(n,r) a^r b^{n-r} for f = a x^d + b x^e, i.e.
// ((2i-e)n + i - j)/(d-e) when that is an integer.
std::optional<i64> hw_entry_index(int i, int j, int d, int e, const PrimeField& F);

struct HasseWittMatrix {
    std::array<std::array<u64, 3>, 3> w;
};

// Lemma-backed matrix. The residue classes whose only nonzero entries are
// off-diagonal (p = 3 mod 8 for C1, p = 5 mod 12 for C2) have no fast
// binomial and are rejected; their traces are still 0 resp. lemma-covered.
HasseWittMatrix hw_matrix(const CurveFamily& fam, const PrimeField& F,
                          const TraceOptions& opt = {});

u64 weil_bound(u64 p);                          // floor(6 sqrt p), exact
i64 lift_centered(u64 m, const PrimeField& F);  // rep of m in [-B, B]; needs p > 2B

// t_p = p + 1 - #C(F_p). Unique centered lift for p >= 149; smaller good
// primes are routed to the naive point count.
i64 trace_c1(u64 c_mod_p, const PrimeField& F, const TraceOptions& opt = {});
i64 trace_c2(u64 c_mod_p, const PrimeField& F, const TraceOptions& opt = {});
i64 trace(const CurveFamily& fam, const PrimeField& F, const TraceOptions& opt = {});

} // namespace stf
