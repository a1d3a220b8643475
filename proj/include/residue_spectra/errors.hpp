#pragma once

#include <stdexcept>
#include <string>

namespace residue_spectra {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p failed the deterministic primality test (or is even).
struct NotPrime : Error {
    using Error::Error;
};

// Inverse of a residue divisible by p.
struct ZeroInverse : Error {
    using Error::Error;
};

// Rational argument whose denominator is divisible by p.
struct BadRational : Error {
    using Error::Error;
};

// Cubic-residue classification requested for p not congruent to 1 mod 3.
struct NotOneModThree : Error {
    using Error::Error;
};

// Root count of the identically-zero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// Argument outside the supported range (e.g. binomial with n >= p).
struct OutOfRange : Error {
    using Error::Error;
};

// A parameter that must be nonzero mod p reduced to zero.
struct ZeroParameter : Error {
    using Error::Error;
};

// Prime in the wrong residue class for the requested operation.
struct WrongResidueClass : Error {
    using Error::Error;
};

// Coefficient lookup beyond the cached series cutoff.
struct CutoffExceeded : Error {
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed.
struct Overflow : Error {
    using Error::Error;
};

} // namespace residue_spectra
