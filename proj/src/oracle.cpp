#include "stf/oracle.hpp"

#include <stdexcept>

namespace stf {

u64 naive_count(const AffineModel& f, const PrimeField& F) {
    const u64 p = F.p;
    if (p >= (u64(1) << 24)) throw std::invalid_argument("naive_count: oracle scale is p < 2^24");
    if (f.coeff.empty() || f.coeff.back() % p == 0)
        throw std::invalid_argument("naive_count: leading coefficient vanishes");
    std::vector<char> is_sq(p, 0);
    for (u64 t = 0; t <= F.n; ++t) is_sq[mul_mod(t, t, p)] = 1;
    u64 count = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 v = f.eval(x, p);
        if (v == 0) count += 1;
        else if (is_sq[v]) count += 2;
    }
    if (f.degree() % 2 == 1) {
        count += 1;
    } else {
        u64 lc = f.coeff.back() % p;
        count += is_sq[lc] ? 2 : 0;
    }
    return count;
}

i64 naive_trace(const AffineModel& f, const PrimeField& F) {
    return (i64)(F.p + 1) - (i64)naive_count(f, F);
}

u64 naive_binom_mod(u64 n, u64 r, const PrimeField& F) {
    const u64 p = F.p;
    if (n >= p) throw std::invalid_argument("naive_binom_mod: need n < p");
    if (r > n) return 0;
    u64 num = 1, den = 1;
    for (u64 k = 1; k <= r; ++k) {
        num = mul_mod(num, (n - k + 1) % p, p);
        den = mul_mod(den, k % p, p);
    }
    return mul_mod(num, inv_mod(den, F), p);
}

std::array<std::array<u64, 3>, 3> naive_hasse_witt(const AffineModel& f, const PrimeField& F) {
    const u64 p = F.p;
    if (p >= (u64(1) << 14)) throw std::invalid_argument("naive_hasse_witt: oracle scale is p < 2^14");
    std::vector<u64> pw{1};
    std::vector<u64> g(f.coeff);
    for (auto& c : g) c %= p;
    for (u64 step = 0; step < F.n; ++step) {
        std::vector<u64> next(pw.size() + g.size() - 1, 0);
        for (size_t i = 0; i < pw.size(); ++i) {
            if (pw[i] == 0) continue;
            for (size_t j = 0; j < g.size(); ++j)
                next[i + j] = add_mod(next[i + j], mul_mod(pw[i], g[j], p), p);
        }
        pw.swap(next);
    }
    std::array<std::array<u64, 3>, 3> w{};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            u64 idx = (u64)i * p - (u64)j;
            w[i - 1][j - 1] = idx < pw.size() ? pw[idx] : 0;
        }
    return w;
}

} // namespace stf
