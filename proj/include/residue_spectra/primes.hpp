#pragma once

#include <cstdint>
#include <vector>

namespace residue_spectra {

// Deterministic Miller-Rabin, valid on the whole 64-bit range.
bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending. Sieve of Eratosthenes; hi is capped at
// 2^31 (the harness never goes near that).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace residue_spectra
