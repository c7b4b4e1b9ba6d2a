#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lfds {

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

// Prime factorization of n >= 1, primes strictly increasing, memoized in a
// process-wide synchronized cache. n = 1 yields an empty sequence.
// Trial division up to 10^6, then Pollard rho with Brent cycle detection.
std::vector<std::pair<uint64_t, int>> int_factorize(uint64_t n);

}  // namespace lfds
