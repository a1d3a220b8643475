#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "residue_spectra/errors.hpp"

namespace residue_spectra {

/// Truncated integer q-expansion; coeffs[n] is the coefficient of q^n.
struct QSeries {
    std::vector<std::int64_t> coeffs;

    std::uint64_t cutoff() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::int64_t at(std::uint64_t n) const;
};

// prod_{k>=1} (1 - q^(scale*k)) truncated at nmax: by the pentagonal number
// theorem the coefficient at scale*j(3j-+1)/2 is (-1)^j and everything else
// vanishes.
QSeries euler_series(std::uint64_t scale, std::uint64_t nmax);

/// One eta-quotient shape q * prod_i prod_k (1 - q^(scale_i * k))^(exp_i).
struct EtaFactor {
    std::uint64_t scale;
    unsigned exponent;
};

struct EtaSpec {
    std::vector<EtaFactor> factors;

    // The four shapes used here, keyed by level N in {14, 15, 20, 24}:
    //   14: (1)(2)(7)(14)    15: (1)(3)(5)(15)
    //   20: (2)^2 (10)^2     24: (2)(4)(6)(12)
    static EtaSpec level(int n);
};

// Expands the eta product to nmax; the result's coefficient at n is a_N(n)
// (so index 0 is zero and index 1 is 1). Convolutions run on the
// constant-term-1 Euler factors and the leading q is applied as a final
// index shift. Throws Overflow if a coefficient leaves the 64-bit range.
QSeries eta_product(const EtaSpec& spec, std::uint64_t nmax);

/// Memoized a_N(n) for all four levels up to a fixed cutoff, immutable once
/// built and safe to share across threads.
class EtaCache {
public:
    explicit EtaCache(std::uint64_t cutoff);

    std::uint64_t cutoff() const { return cutoff_; }

    // Throws CutoffExceeded when n > cutoff and Error for an unknown level.
    std::int64_t at(int level, std::uint64_t n) const;

private:
    std::uint64_t cutoff_;
    std::array<QSeries, 4> series_; // levels 14, 15, 20, 24
};

} // namespace residue_spectra
