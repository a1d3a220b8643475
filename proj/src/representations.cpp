#include "residue_spectra/representations.hpp"

#include <cmath>
#include <string>

namespace residue_spectra {

namespace {

// Integer square root with exactness flag.
bool perfect_square(u64 n, u64& root) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("representation count overflowed");
    return out;
}

i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow("representation count overflowed");
    return out;
}

// theta[j] = |{x in Z : s*x^2 = j}| for j <= nmax.
std::vector<i64> theta_vector(u64 s, u64 nmax) {
    std::vector<i64> v(nmax + 1, 0);
    v[0] = 1;
    for (u64 x = 1; s * x * x <= nmax; ++x) v[s * x * x] += 2;
    return v;
}

// tri[j] = |{x >= 0 : s*x(x+1)/2 = j}| for j <= nmax.
std::vector<i64> triangular_vector(u64 s, u64 nmax) {
    std::vector<i64> v(nmax + 1, 0);
    for (u64 x = 0;; ++x) {
        const u64 e = s * (x * (x + 1) / 2);
        if (e > nmax) break;
        v[e] += 1;
    }
    return v;
}

// Truncated convolution; iterates the nonzero entries of b (the one-variable
// vectors are sqrt-sparse, so building a four-fold product stays O(n^1.5)).
std::vector<i64> convolve(const std::vector<i64>& a, const std::vector<i64>& b, u64 nmax) {
    std::vector<i64> out(nmax + 1, 0);
    for (u64 j = 0; j <= nmax; ++j) {
        if (b[j] == 0) continue;
        for (u64 i = 0; i + j <= nmax; ++i) {
            if (a[i] == 0) continue;
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
        }
    }
    return out;
}

std::vector<i64> fourfold(const std::vector<i64>& va, const std::vector<i64>& vb,
                          const std::vector<i64>& vc, const std::vector<i64>& vd, u64 nmax) {
    auto acc = convolve(va, vb, nmax);
    acc = convolve(acc, vc, nmax);
    return convolve(acc, vd, nmax);
}

} // namespace

Decomposition decompose(const PrimeField& fld) {
    const u64 p = fld.p();
    if (p % 3 != 1) throw WrongResidueClass("decompose: requires p = 1 (mod 3)");
    if (p >= (u64(1) << 62)) throw OutOfRange("decompose: p must be below 2^62");

    Decomposition d;
    d.p = p;

    int found = 0;
    for (u64 b = 1; 3 * b * b < p; ++b) {
        u64 a;
        if (perfect_square(p - 3 * b * b, a)) {
            ++found;
            d.A = a % 3 == 1 ? static_cast<i64>(a) : -static_cast<i64>(a);
            d.B = static_cast<i64>(b);
        }
    }
    if (found != 1) {
        throw Error("decompose: expected a unique A^2 + 3B^2 pair for p = " + std::to_string(p) +
                    ", found " + std::to_string(found));
    }

    found = 0;
    for (u64 m = 1; 27 * m * m < 4 * p; ++m) {
        u64 l;
        if (perfect_square(4 * p - 27 * m * m, l)) {
            ++found;
            d.L = l % 3 == 1 ? static_cast<i64>(l) : -static_cast<i64>(l);
            d.M = static_cast<i64>(m);
        }
    }
    if (found != 1) {
        throw Error("decompose: expected a unique L^2 + 27M^2 pair for p = " + std::to_string(p) +
                    ", found " + std::to_string(found));
    }
    return d;
}

std::pair<bool, bool> jacobi_check(const PrimeField& fld, const Decomposition& d) {
    const u64 p = fld.p();
    const u64 half = fld.inv(2);
    const u64 a_rhs = fld.mul(half, fld.binom((p - 1) / 2, (p - 1) / 6));
    const u64 l_rhs = fld.sub(0, fld.binom(2 * (p - 1) / 3, (p - 1) / 3));
    return {fld.reduce(d.A) == a_rhs, fld.reduce(d.L) == l_rhs};
}

std::vector<i64> quaternary_series(u64 a, u64 b, u64 c, u64 d, u64 nmax) {
    return fourfold(theta_vector(a, nmax), theta_vector(b, nmax), theta_vector(c, nmax),
                    theta_vector(d, nmax), nmax);
}

std::vector<i64> triangular_series(u64 a, u64 b, u64 c, u64 d, u64 nmax) {
    return fourfold(triangular_vector(a, nmax), triangular_vector(b, nmax),
                    triangular_vector(c, nmax), triangular_vector(d, nmax), nmax);
}

i64 quaternary_count(u64 a, u64 b, u64 c, u64 d, u64 n) {
    return quaternary_series(a, b, c, d, n)[n];
}

i64 triangular_count(u64 a, u64 b, u64 c, u64 d, u64 n) {
    return triangular_series(a, b, c, d, n)[n];
}

} // namespace residue_spectra
