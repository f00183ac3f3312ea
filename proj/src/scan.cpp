#include "stf/scan.hpp"

#include "stf/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>
#include <stdexcept>

namespace stf {

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void accumulate_prime(u64 p, const CurveFamily& fam, const SplitFilter& filter,
                      const TraceOptions& base_opt, MomentAccumulator& acc) {
    if (!good_prime(fam, p)) return;
    PrimeField F(p);
    if (!filter.pass(F)) return;
    TraceOptions opt = base_opt;
    if (opt.algo == SqrtAlgo::Cipolla) opt.seed = splitmix64(base_opt.seed ^ p);
    i64 t = trace(fam, F, opt);
    double a1 = -(double)t / std::sqrt((double)p);
    acc.add(a1, t == 0);
}

MomentAccumulator process_chunk(u64 lo, u64 hi, const CurveFamily& fam,
                                const SplitFilter& filter, const ScanConfig& cfg) {
    MomentAccumulator acc(cfg.bins);
    for (u64 p : sieve_segment(lo, hi))
        accumulate_prime(p, fam, filter, cfg.trace, acc);
    return acc;
}

ScanReport make_report(const CurveFamily& fam, const ScanConfig& cfg) {
    ScanReport rep;
    rep.family = family_name(fam.fam);
    rep.c_num = fam.c_num;
    rep.c_den = fam.c_den;
    rep.limit = cfg.limit;
    rep.filter = split_field_name(cfg.field);
    rep.acc = MomentAccumulator(cfg.bins);
    return rep;
}

} // namespace

ScanReport scan(const CurveFamily& fam, const ScanConfig& cfg) {
    if (cfg.chunk_width == 0) throw std::invalid_argument("scan: chunk_width must be positive");
    if (cfg.limit >= (u64(1) << 62)) throw std::invalid_argument("scan: limit out of range");
    ScanReport rep = make_report(fam, cfg);
    SplitFilter filter = split_filter_for(cfg.field, fam);
    const u64 end = cfg.limit + 1; // scan [2, limit]
    if (end < 2) return rep;
    const u64 n_chunks = (end + cfg.chunk_width - 1) / cfg.chunk_width;
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
    const u64 block = std::max<u64>(4 * (u64)threads, 1);

    std::vector<MomentAccumulator> slots;
    for (u64 first = 0; first < n_chunks; first += block) {
        const u64 last = std::min(first + block, n_chunks);
        slots.assign(last - first, MomentAccumulator(cfg.bins));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (i64 k = (i64)first; k < (i64)last; ++k) {
            u64 lo = (u64)k * cfg.chunk_width;
            u64 hi = std::min(lo + cfg.chunk_width, end);
            slots[(size_t)(k - (i64)first)] = process_chunk(lo, hi, fam, filter, cfg);
        }
        for (auto& s : slots) rep.acc.merge(s); // ascending chunk order
    }
    return rep;
}

ScanReport scan_serial(const CurveFamily& fam, const ScanConfig& cfg) {
    ScanReport rep = make_report(fam, cfg);
    SplitFilter filter = split_filter_for(cfg.field, fam);
    const u64 end = cfg.limit + 1;
    if (end < 2) return rep;
    // still sieve in windows to bound memory, but accumulate directly
    for (u64 lo = 0; lo < end; lo += cfg.chunk_width) {
        u64 hi = std::min(lo + cfg.chunk_width, end);
        for (u64 p : sieve_segment(lo, hi))
            accumulate_prime(p, fam, filter, cfg.trace, rep.acc);
    }
    return rep;
}

} // namespace stf
