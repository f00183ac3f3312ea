// Timing harness: per-prime trace cost across prime scales (the point is the
// polylog growth), fast path vs naive counting, the two modular square root
// algorithms, and the chunked scan engine vs the flat serial reference.

#include "stf/oracle.hpp"
#include "stf/scan.hpp"
#include "stf/sieve.hpp"

#include <chrono>
#include <cstdio>
#include <vector>

using namespace stf;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// n primes at or above `from`, by Miller-Rabin walk; good for both families
std::vector<u64> primes_near(u64 from, int n) {
    std::vector<u64> out;
    u64 c = from | 1;
    while ((int)out.size() < n) {
        if (is_prime_u64(c) && c > 3) out.push_back(c);
        c += 2;
    }
    return out;
}

u64 g_sink = 0; // keeps the timed calls observable

template <class F>
double per_call_us(const std::vector<u64>& primes, F&& f) {
    for (u64 p : primes) g_sink += (u64)f(p); // warm
    const double t0 = now_s();
    for (u64 p : primes) g_sink += (u64)f(p);
    const double dt = now_s() - t0;
    return dt / (double)primes.size() * 1e6;
}

} // namespace

int main() {
    const auto f1 = make_family(Family::C1, 1);
    const auto f2 = make_family(Family::C2, 1);

    std::puts("per-prime trace cost, fast path (mean over 400 primes per scale)");
    std::puts("  scale       y^2 = x^8 + c    y^2 = x^7 - cx");
    double us30 = 0, us60 = 0;
    for (int k : {20, 30, 40, 50, 60}) {
        const auto ps = primes_near(u64(1) << k, 400);
        const double a = per_call_us(ps, [&](u64 p) { return trace(f1, PrimeField(p)); });
        const double b = per_call_us(ps, [&](u64 p) { return trace(f2, PrimeField(p)); });
        if (k == 30) us30 = a;
        if (k == 60) us60 = a;
        std::printf("  p ~ 2^%d     %8.2f us      %8.2f us\n", k, a, b);
    }
    std::printf("  growth: cost(2^60)/cost(2^30) = %.2f with log p doubled"
                " (subquartic needs < 16)\n\n",
                us60 / us30);

    std::puts("fast path vs naive point count (first family, c = 1)");
    for (int k : {14, 17, 20}) {
        const auto ps = primes_near(u64(1) << k, k >= 20 ? 4 : 16);
        const double fast = per_call_us(ps, [&](u64 p) { return trace(f1, PrimeField(p)); });
        const double naive = per_call_us(ps, [&](u64 p) {
            PrimeField F(p);
            AffineModel f{{reduce_c(f1, F), 0, 0, 0, 0, 0, 0, 0, 1}};
            return naive_trace(f, F);
        });
        std::printf("  p ~ 2^%d: fast %.2f us, naive %.0f us (x%.0f)\n", k, fast, naive,
                    naive / fast);
    }
    std::puts("");

    std::puts("modular square root of -1, 300 primes = 1 mod 4 per scale");
    for (int k : {30, 60}) {
        std::vector<u64> ps;
        u64 c = (u64(1) << k) | 1;
        while ((int)ps.size() < 300) {
            if (c % 4 == 1 && is_prime_u64(c)) ps.push_back(c);
            c += 2;
        }
        const double ts = per_call_us(ps, [&](u64 p) {
            PrimeField F(p);
            return *sqrt_mod(p - 1, F, SqrtAlgo::TonelliShanks, 0);
        });
        const double ci = per_call_us(ps, [&](u64 p) {
            PrimeField F(p);
            return *sqrt_mod(p - 1, F, SqrtAlgo::Cipolla, 1);
        });
        std::printf("  p ~ 2^%d: Tonelli-Shanks %.2f us, Cipolla %.2f us\n", k, ts, ci);
    }
    std::puts("");

    std::puts("scan engine at limit 2^22 (first family, c = 1)");
    ScanConfig cfg;
    cfg.limit = u64(1) << 22;
    double t0 = now_s();
    const auto serial = scan_serial(f1, cfg);
    const double t_serial = now_s() - t0;
    t0 = now_s();
    const auto chunked = scan(f1, cfg);
    const double t_chunked = now_s() - t0;
    std::printf("  flat serial reference: %.2f s\n", t_serial);
    std::printf("  chunked engine:        %.2f s (x%.2f, default thread count)\n", t_chunked,
                t_serial / t_chunked);
    std::printf("  agreement: counts %llu / %llu, M2 %.9f / %.9f\n",
                (unsigned long long)serial.acc.count, (unsigned long long)chunked.acc.count,
                serial.acc.moment(2), chunked.acc.moment(2));

    std::printf("\n(checksum %llu)\n", (unsigned long long)g_sink);
    return 0;
}
