#pragma once

#include <cstdint>

namespace residue_spectra {

// Quadratic-form decomposition of a prime p = 1 (mod 3):
//
//     p = A^2 + 3 B^2,    4p = L^2 + 27 M^2,
//
// normalized so that A = L = 1 (mod 3) and B, M > 0. Under that
// normalization all four values are unique.
struct Decomposition {
    std::uint64_t p = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::int64_t L = 0;
    std::int64_t M = 0;
};

} // namespace residue_spectra
