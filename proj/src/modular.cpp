#include "residue_spectra/modular.hpp"

#include <string>

#include "residue_spectra/primes.hpp"

namespace residue_spectra {

namespace {
constexpr u64 kQrTableCap = u64(1) << 31;
constexpr u64 kFactorialCap = u64(1) << 24;
} // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw NotPrime("PrimeField: " + std::to_string(p) + " is not an odd prime");
    }
}

u64 PrimeField::reduce(i64 a) const {
    i64 r = a % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    return static_cast<u64>(r);
}

u64 PrimeField::add(u64 a, u64 b) const {
    u64 s = a + b; // a, b < p < 2^63, no wrap
    return s >= p_ ? s - p_ : s;
}

u64 PrimeField::sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }

u64 PrimeField::mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p_);
}

u64 PrimeField::pow(u64 base, u64 exp) const {
    u64 r = 1;
    base %= p_;
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

u64 PrimeField::inv(u64 a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse("inv: argument divisible by p = " + std::to_string(p_));
    return pow(a, p_ - 2);
}

int PrimeField::legendre(i64 a) const {
    // Binary Jacobi algorithm; for prime modulus this is the Legendre symbol.
    u64 x = reduce(a);
    if (x == 0) return 0;
    u64 n = p_;
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            u64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, n);
        if ((x % 4 == 3) && (n % 4 == 3)) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

int PrimeField::legendre_rational(i64 num, i64 den) const {
    u64 d = reduce(den);
    if (d == 0) throw BadRational("legendre_rational: denominator divisible by p");
    // (u/v / p) = ((u * v^(p-2)) / p).
    u64 u = reduce(num);
    if (u == 0) return 0;
    return legendre(static_cast<i64>(mul(u, inv(d))));
}

const std::vector<std::uint8_t>& PrimeField::qr_table() const {
    if (qr_.empty()) {
        if (p_ >= kQrTableCap) {
            throw OutOfRange("qr_table: p must be below 2^31");
        }
        std::vector<std::uint8_t> table(p_, 0);
        table[0] = 1;
        for (u64 x = 1; x <= (p_ - 1) / 2; ++x) table[mul(x, x)] = 1;
        qr_ = std::move(table);
    }
    return qr_;
}

void PrimeField::build_factorials() const {
    std::vector<u64> fact(p_), inv_fact(p_);
    fact[0] = 1;
    for (u64 i = 1; i < p_; ++i) fact[i] = mul(fact[i - 1], i);
    inv_fact[p_ - 1] = inv(fact[p_ - 1]);
    for (u64 i = p_ - 1; i > 0; --i) inv_fact[i - 1] = mul(inv_fact[i], i);
    fact_ = std::move(fact);
    inv_fact_ = std::move(inv_fact);
}

u64 PrimeField::binom(u64 n, u64 k) const {
    if (n >= p_) throw OutOfRange("binom: n must be below p");
    if (k > n) return 0;
    if (p_ < kFactorialCap) {
        if (fact_.empty()) build_factorials();
        return mul(fact_[n], mul(inv_fact_[k], inv_fact_[n - k]));
    }
    if (k > n - k) k = n - k;
    u64 num = 1, den = 1;
    for (u64 i = 0; i < k; ++i) {
        num = mul(num, (n - i) % p_);
        den = mul(den, (i + 1) % p_);
    }
    return mul(num, inv(den));
}

PolyZp PolyZp::from_coeffs(std::span<const i64> coeffs, const PrimeField& fld) {
    std::vector<u64> r(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) r[i] = fld.reduce(coeffs[i]);
    return from_residues(std::move(r));
}

PolyZp PolyZp::from_residues(std::vector<u64> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    PolyZp f;
    f.coeffs_ = std::move(coeffs);
    return f;
}

u64 PolyZp::eval(u64 x, const PrimeField& fld) const {
    u64 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = fld.add(fld.mul(acc, x), *it);
    }
    return acc;
}

u64 count_roots(const PolyZp& f, const PrimeField& fld) {
    if (f.is_zero()) throw ZeroPolynomial("count_roots: polynomial vanishes mod p");
    u64 count = 0;
    for (u64 x = 0; x < fld.p(); ++x) {
        if (f.eval(x, fld) == 0) ++count;
    }
    return count;
}

CubicClass cubic_class(u64 a, const PrimeField& fld, const Decomposition& d) {
    const u64 p = fld.p();
    if (p % 3 != 1) throw NotOneModThree("cubic_class: p must be 1 (mod 3)");
    a %= p;
    if (a == 0) throw ZeroParameter("cubic_class: argument divisible by p");
    const u64 e = fld.pow(a, (p - 1) / 3);
    if (e == 1) return CubicClass::Unity;
    // The two non-trivial cube roots of unity: (-1 +- A/B)/2, using
    // (A/B)^2 = -3 from p = A^2 + 3B^2.
    const u64 ratio = fld.mul(fld.reduce(d.A), fld.inv(fld.reduce(d.B)));
    const u64 half = fld.inv(2);
    const u64 plus = fld.mul(fld.sub(ratio, 1), half);
    const u64 minus = fld.mul(fld.sub(fld.sub(0, ratio), 1), half);
    if (e == plus) return CubicClass::PlusBranch;
    if (e == minus) return CubicClass::MinusBranch;
    throw Error("cubic_class: a^((p-1)/3) is not a cube root of unity; bad decomposition?");
}

} // namespace residue_spectra
