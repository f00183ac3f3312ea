#pragma once

#include "stf/modp.hpp"

#include <vector>

namespace stf {

// Primes in [lo, hi), segmented Eratosthenes. Stateless: base primes up to
// sqrt(hi) are resieved per call, which keeps this safe to call from
// parallel workers.
std::vector<u64> sieve_segment(u64 lo, u64 hi);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

} // namespace stf
