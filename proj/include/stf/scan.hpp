#pragma once

#include "stf/stats.hpp"

namespace stf {

struct ScanConfig {
    u64 limit = u64(1) << 22;       // scan good primes <= limit
    SplitField field = SplitField::Q;
    int bins = 120;
    int threads = 0;                // 0 = OpenMP default (honors OMP_NUM_THREADS)
    u64 chunk_width = u64(1) << 20; // fixed-size prime chunks
    TraceOptions trace;
};

// OpenMP engine: chunks are processed in parallel, each into its own
// accumulator, and merged in ascending chunk order, so results for a fixed
// chunk width do not depend on the thread count.
ScanReport scan(const CurveFamily& fam, const ScanConfig& cfg);

// Flat single-pass reference: one accumulator, primes visited in order,
// no chunk merging. Kept for testing and benchmarking the engine.
ScanReport scan_serial(const CurveFamily& fam, const ScanConfig& cfg);

} // namespace stf
