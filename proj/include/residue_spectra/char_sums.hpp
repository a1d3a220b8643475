#pragma once

#include "residue_spectra/modular.hpp"

namespace residue_spectra {

/// Point count of y^2 = x^3 + mx + n over F_p (affine points plus the point
/// at infinity), obtained from the character sum
///     #E_p = p + 1 + sum_{x=0}^{p-1} ((x^3 + mx + n)/p).
/// The sweep is performed whether or not the curve is singular; callers that
/// need a genuine elliptic curve must consult `singular`.
struct CurveCount {
    u64 m = 0;
    u64 n = 0;
    u64 p = 0;
    i64 count = 0;
    bool singular = false; // 4m^3 + 27n^2 = 0 (mod p)
};

CurveCount curve_point_count(u64 m, u64 n, const PrimeField& fld); // requires p > 3

// sum_{x=1}^{p-1} ((x(x^3 + m))/p). Throws ZeroParameter when p | m.
// For p = 2 (mod 3) the value is -1; for p = 1 (mod 3) it lies in
// {-1-2A, -1+A+3B, -1+A-3B} with the branch picked by cubic_class(m).
i64 jacobsthal_cubic_sum(u64 m, const PrimeField& fld);

// |{x in Z_p* : x^3 - 3tx + 3t^2 = 0 (mod p), (6x/p) = -1}|.
int epsilon_p(u64 t, const PrimeField& fld); // ZeroParameter when p | t

// |{x in Z_p* : x^3 + 4kx + 8k^2 = 0 (mod p), (x/p) = -1}|.
int delta_k(u64 k, const PrimeField& fld); // ZeroParameter when p | k

// The mod-40 table for p = 3 (mod 4), p not dividing 10:
//   0 for p = 7, 23 (mod 40); 1 for p = 3, 27, 31, 39; 2 for p = 11, 19.
int delta_mod40(const PrimeField& fld); // WrongResidueClass otherwise

} // namespace residue_spectra
