#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "residue_spectra/decomposition.hpp"
#include "residue_spectra/errors.hpp"

namespace residue_spectra {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Arithmetic in Z_p for an odd prime p.
///
/// A PrimeField is immutable once its lazy tables exist; construct it (and,
/// if a sweep will share it across threads, touch qr_table() once) before
/// handing it to concurrent workers. Table construction itself is not
/// synchronized.
class PrimeField {
public:
    // Throws NotPrime unless p is an odd prime.
    explicit PrimeField(u64 p);

    u64 p() const { return p_; }

    // Reduces a signed integer into [0, p).
    u64 reduce(i64 a) const;

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 mul(u64 a, u64 b) const;

    // base^exp mod p; pow(0, 0) = 1 (empty product).
    u64 pow(u64 base, u64 exp) const;

    // Multiplicative inverse; throws ZeroInverse when p | a.
    u64 inv(u64 a) const;

    // Legendre symbol (a/p) in {-1, 0, +1}, computed by the binary
    // reciprocity algorithm. Euler's criterion is kept as a test oracle.
    int legendre(i64 a) const;

    // (num/den / p) for a rational p-integer; throws BadRational if p | den.
    int legendre_rational(i64 num, i64 den) const;

    // Table of quadratic residues: entry r is 1 iff r is a square mod p
    // (entry 0 is 1). Built on first use; requires p < 2^31.
    const std::vector<std::uint8_t>& qr_table() const;

    // Table-backed symbol for an already-reduced residue.
    int legendre_lookup(u64 r) const {
        if (r == 0) return 0;
        return qr_table()[r] ? 1 : -1;
    }

    // Binomial coefficient C(n, k) mod p for n < p (throws OutOfRange
    // otherwise). Factorial tables are cached for p < 2^24; larger fields
    // use an on-the-fly k-term product.
    u64 binom(u64 n, u64 k) const;

private:
    void build_factorials() const;

    u64 p_;
    mutable std::vector<std::uint8_t> qr_;
    mutable std::vector<u64> fact_;
    mutable std::vector<u64> inv_fact_;
};

// (-1/p) = (-1)^((p-1)/2).
inline int legendre_minus_one(u64 p) { return p % 4 == 1 ? 1 : -1; }

// The symbol (p/3) for p > 3: +1 iff p = 1 (mod 3).
inline int legendre_p_over_3(u64 p) { return p % 3 == 1 ? 1 : -1; }

/// Dense polynomial over Z_p, coefficients lowest degree first, trailing
/// zeros trimmed. The zero polynomial has no coefficients.
class PolyZp {
public:
    PolyZp() = default;

    // Reduces signed coefficients mod p and trims.
    static PolyZp from_coeffs(std::span<const i64> coeffs, const PrimeField& fld);

    // Takes already-reduced residues (still trims).
    static PolyZp from_residues(std::vector<u64> coeffs);

    const std::vector<u64>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Horner evaluation at x.
    u64 eval(u64 x, const PrimeField& fld) const;

private:
    std::vector<u64> coeffs_;
};

// N_p(f): number of x in Z_p with f(x) = 0 (mod p), by direct sweep.
// Throws ZeroPolynomial when every coefficient vanishes.
u64 count_roots(const PolyZp& f, const PrimeField& fld);

// Cubic-residue classification of a nonzero residue a for p = 1 (mod 3):
// a^((p-1)/3) equals exactly one of the three cube roots of unity
//   1,  (-1 + A/B)/2,  (-1 - A/B)/2   (mod p),
// written against the normalized decomposition p = A^2 + 3B^2.
enum class CubicClass { Unity, PlusBranch, MinusBranch };

CubicClass cubic_class(u64 a, const PrimeField& fld, const Decomposition& d);

} // namespace residue_spectra
