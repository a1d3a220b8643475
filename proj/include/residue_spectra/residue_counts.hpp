#pragma once

#include <map>

#include "residue_spectra/modular.hpp"

namespace residue_spectra {

/// Polynomial plus an optional c/x term, the object whose residue count is
/// taken. When c != 0 the evaluation domain is Z_p* (x = 0 is excluded);
/// when c == 0 it is all of Z_p.
struct LaurentPoly {
    PolyZp poly;
    u64 c = 0; // coefficient of 1/x, already reduced

    static LaurentPoly make(std::span<const i64> coeffs, i64 c, const PrimeField& fld);
};

// V_p(f): the number of distinct residues r in Z_p attained by f(x) as x
// runs over its domain. One O(p) sweep marking a boolean scratch buffer.
//
// The attained value r = 0 counts: with r restricted to Z_p* the case
// p = 5, V_p(x^2 + 2/x) would give 2 and the (2p-1)/3 evaluation would be
// false, so the r-in-Z_p reading is the one every closed form here assumes.
u64 residue_count(const LaurentPoly& f, const PrimeField& fld);

// Fiber sizes: for each attained residue r, how many x map to it.
// Multiplicities sum to p (pure polynomial) or p-1 (c != 0).
std::map<u64, u64> residue_profile(const LaurentPoly& f, const PrimeField& fld);

} // namespace residue_spectra
