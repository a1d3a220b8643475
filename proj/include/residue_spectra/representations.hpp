#pragma once

#include <utility>
#include <vector>

#include "residue_spectra/decomposition.hpp"
#include "residue_spectra/modular.hpp"

namespace residue_spectra {

// Finds the normalized decomposition p = A^2 + 3B^2, 4p = L^2 + 27M^2 by
// bounded search over B and M, sign-fixing A and L to 1 (mod 3). Throws
// WrongResidueClass unless p = 1 (mod 3). The search asserts that exactly
// one magnitude pair exists for each form.
Decomposition decompose(const PrimeField& fld);

// Jacobi's congruences for the decomposition:
//   first:  A = (1/2) C((p-1)/2, (p-1)/6)   (mod p)
//   second: L = -C(2(p-1)/3, (p-1)/3)       (mod p)
std::pair<bool, bool> jacobi_check(const PrimeField& fld, const Decomposition& d);

// N(a,b,c,d;n): representations of n = ax^2 + by^2 + cz^2 + dw^2 over
// signed integers, for every n in [0, nmax]. Computed by convolving the
// four one-variable theta vectors; 64-bit accumulators with overflow
// checks.
std::vector<i64> quaternary_series(u64 a, u64 b, u64 c, u64 d, u64 nmax);

// T(a,b,c,d;n): representations of n by a*x(x+1)/2 + ... over nonnegative
// integers, for every n in [0, nmax].
std::vector<i64> triangular_series(u64 a, u64 b, u64 c, u64 d, u64 nmax);

i64 quaternary_count(u64 a, u64 b, u64 c, u64 d, u64 n);
i64 triangular_count(u64 a, u64 b, u64 c, u64 d, u64 n);

} // namespace residue_spectra
