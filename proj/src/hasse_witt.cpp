#include "stf/hasse_witt.hpp"

#include "stf/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stf {

CurveFamily make_family(Family fam, i64 c_num, i64 c_den) {
    if (c_num == 0 || c_den == 0)
        throw std::invalid_argument("make_family: c must be a nonzero rational");
    if (c_den < 0) { c_num = -c_num; c_den = -c_den; }
    i64 g = std::gcd(c_num < 0 ? -c_num : c_num, c_den);
    return CurveFamily{fam, c_num / g, c_den / g};
}

const char* family_name(Family fam) { return fam == Family::C1 ? "c1" : "c2"; }

bool good_prime(const CurveFamily& fam, u64 p) {
    if (p < 3) return false;
    if (p == 3 && fam.fam == Family::C2) return false;
    u64 num = fam.c_num < 0 ? (u64)(-fam.c_num) : (u64)fam.c_num;
    return num % p != 0 && (u64)fam.c_den % p != 0;
}

u64 reduce_c(const CurveFamily& fam, const PrimeField& F) {
    u64 den = (u64)fam.c_den % F.p;
    if (den == 0) throw std::domain_error("reduce_c: p divides denominator");
    return mul_mod(mod_signed(fam.c_num, F.p), inv_mod(den, F), F.p);
}

namespace {

// 2 (-1)^(m+1) x mod p for the relevant decompositions
u64 lemma_value(i64 x, int sign_exp_parity, const PrimeField& F) {
    u64 xm = mod_signed(x, F.p);
    u64 v = mul_mod(2, xm, F.p);
    return sign_exp_parity % 2 == 0 ? v : sub_mod(0, v, F.p);
}

u64 binom_half_from(const FormSolution& sol, const PrimeField& F) {
    u64 m = (F.p - 1) / 4;
    return lemma_value(sol.x, (int)((m + 1) % 2), F);
}

u64 binom_quarter_from(const FormSolution& sol, const PrimeField& F) {
    u64 m = (F.p - 1) / 8;
    return lemma_value(sol.x, (int)((m + 1) % 2), F);
}

u64 binom_sixth_from(const FormSolution& sol, const PrimeField& F) {
    u64 m = (F.p - 1) / 12;
    int eps = (sol.x % 3 == 0) ? 0 : 1;
    return lemma_value(sol.x, (int)((m + eps) % 2), F);
}

AffineModel model_c1(u64 cbar) {
    return AffineModel{{cbar, 0, 0, 0, 0, 0, 0, 0, 1}};
}

AffineModel model_c2(u64 cbar, const PrimeField& F) {
    return AffineModel{{0, sub_mod(0, cbar, F.p), 0, 0, 0, 0, 0, 1}};
}

} // namespace

u64 binom_half(const PrimeField& F, const TraceOptions& opt) {
    if (F.p % 4 != 1) throw std::domain_error("binom_half: need p = 1 mod 4");
    return binom_half_from(solve_form_normalized(1, F, opt.algo, opt.seed), F);
}

u64 binom_quarter(const PrimeField& F, const TraceOptions& opt) {
    if (F.p % 8 != 1) throw std::domain_error("binom_quarter: need p = 1 mod 8");
    return binom_quarter_from(solve_form_normalized(2, F, opt.algo, opt.seed), F);
}

u64 binom_sixth(const PrimeField& F, const TraceOptions& opt) {
    if (F.p % 12 != 1) throw std::domain_error("binom_sixth: need p = 1 mod 12");
    return binom_sixth_from(solve_form_normalized(1, F, opt.algo, opt.seed), F);
}

std::optional<i64> hw_entry_index(int i, int j, int d, int e, const PrimeField& F) {
    __int128 num = (__int128)(2 * i - e) * F.n + i - j;
    int de = d - e;
    if (num % de != 0) return std::nullopt;
    return (i64)(num / de);
}

HasseWittMatrix hw_matrix(const CurveFamily& fam, const PrimeField& F, const TraceOptions& opt) {
    HasseWittMatrix M{};
    const u64 p = F.p, n = F.n;
    u64 c = reduce_c(fam, F);
    if (fam.fam == Family::C1) {
        switch (p % 8) {
        case 1: {
            // diagonal class: w11, w22, w33 at row indices n/4, n/2, 3n/4
            u64 bh = binom_half(F, opt), bq = binom_quarter(F, opt);
            M.w[0][0] = mul_mod(bq, pow_mod(c, 3 * n / 4, p), p);
            M.w[1][1] = mul_mod(bh, pow_mod(c, n / 2, p), p);
            M.w[2][2] = mul_mod(bq, pow_mod(c, n / 4, p), p);
            break;
        }
        case 5:
            M.w[1][1] = mul_mod(binom_half(F, opt), pow_mod(c, n / 2, p), p);
            break;
        case 7:
            break; // zero matrix
        default:
            throw std::domain_error("hw_matrix: C1 class p = 3 mod 8 has no lemma-backed entries");
        }
    } else {
        if (p == 3) throw std::domain_error("hw_matrix: C2 has bad reduction at 3");
        u64 mc = sub_mod(0, c, p);
        switch (p % 12) {
        case 1: {
            u64 bh = binom_half(F, opt), bs = binom_sixth(F, opt);
            M.w[0][0] = mul_mod(bs, pow_mod(mc, 5 * n / 6, p), p);
            M.w[1][1] = mul_mod(bh, pow_mod(mc, n / 2, p), p);
            M.w[2][2] = mul_mod(bs, pow_mod(mc, n / 6, p), p);
            break;
        }
        case 7:
        case 11:
            break; // zero matrix
        default:
            throw std::domain_error("hw_matrix: C2 class p = 5 mod 12 has no lemma-backed entries");
        }
    }
    return M;
}

u64 weil_bound(u64 p) {
    u128 target = (u128)36 * p;
    u64 b = (u64)(6.0L * sqrtl((long double)p));
    while (b > 0 && (u128)b * b > target) --b;
    while ((u128)(b + 1) * (b + 1) <= target) ++b;
    return b;
}

i64 lift_centered(u64 m, const PrimeField& F) {
    u64 B = weil_bound(F.p);
    if (F.p <= 2 * B) throw std::domain_error("lift_centered: centered lift not unique");
    u64 r = (m % F.p + B) % F.p;
    return (i64)r - (i64)B;
}

i64 trace_c1(u64 c_mod_p, const PrimeField& F, const TraceOptions& opt) {
    const u64 p = F.p, n = F.n;
    u64 c = c_mod_p % p;
    if (c == 0) throw std::domain_error("trace_c1: bad prime (p divides c)");
    if (p < 149) return naive_trace(model_c1(c), F);
    u64 m;
    switch (p % 8) {
    case 1: {
        u64 bh = binom_half(F, opt), bq = binom_quarter(F, opt);
        m = add_mod(mul_mod(bh, pow_mod(c, n / 2, p), p),
                    mul_mod(bq, add_mod(pow_mod(c, n / 4, p), pow_mod(c, 3 * n / 4, p), p), p), p);
        break;
    }
    case 5:
        m = mul_mod(binom_half(F, opt), pow_mod(c, n / 2, p), p);
        break;
    default:
        return 0; // classes 3, 7 mod 8: empty diagonal
    }
    return lift_centered(m, F);
}

i64 trace_c2(u64 c_mod_p, const PrimeField& F, const TraceOptions& opt) {
    const u64 p = F.p, n = F.n;
    u64 c = c_mod_p % p;
    if (c == 0) throw std::domain_error("trace_c2: bad prime (p divides c)");
    if (p == 3) throw std::domain_error("trace_c2: bad reduction at 3");
    if (p < 149) return naive_trace(model_c2(c, F), F);
    u64 mc = p - c;
    u64 m;
    switch (p % 12) {
    case 1: {
        // both binomials share the two-squares representation of p
        FormSolution sol = solve_form_normalized(1, F, opt.algo, opt.seed);
        u64 bh = binom_half_from(sol, F), bs = binom_sixth_from(sol, F);
        m = add_mod(mul_mod(bh, pow_mod(mc, n / 2, p), p),
                    mul_mod(bs, add_mod(pow_mod(mc, n / 6, p), pow_mod(mc, 5 * n / 6, p), p), p), p);
        break;
    }
    case 5:
        m = mul_mod(binom_half(F, opt), pow_mod(mc, n / 2, p), p);
        break;
    default:
        return 0; // classes 7, 11 mod 12: empty diagonal
    }
    return lift_centered(m, F);
}

i64 trace(const CurveFamily& fam, const PrimeField& F, const TraceOptions& opt) {
    u64 c = reduce_c(fam, F);
    return fam.fam == Family::C1 ? trace_c1(c, F, opt) : trace_c2(c, F, opt);
}

} // namespace stf
