#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "residue_spectra/primes.hpp"
#include "residue_spectra/residue_counts.hpp"

using namespace residue_spectra;

namespace {

// Hand oracle: evaluate pointwise with plain integer arithmetic and collect
// the value set / fibers in a std::set / std::map.
u64 oracle_count(const LaurentPoly& f, const PrimeField& fld) {
    std::set<u64> values;
    const u64 lo = f.c == 0 ? 0 : 1;
    for (u64 x = lo; x < fld.p(); ++x) {
        u64 v = f.poly.eval(x, fld);
        if (f.c != 0) v = fld.add(v, fld.mul(f.c, fld.inv(x)));
        values.insert(v);
    }
    return values.size();
}

LaurentPoly laurent(std::initializer_list<i64> coeffs, i64 c, const PrimeField& fld) {
    return LaurentPoly::make(std::vector<i64>(coeffs), c, fld);
}

} // namespace

TEST_CASE("worked small-prime values") {
    PrimeField f5(5);
    CHECK(residue_count(laurent({0, 0, 1}, 0, f5), f5) == 3);          // V_5(x^2) = (p+1)/2
    CHECK(residue_count(laurent({1, 1, 2, 1}, 0, f5), f5) == 3);       // von Sterneck instance
    CHECK(residue_count(laurent({0, 0, 1}, 2, f5), f5) == 3);          // x^2 + 2/x

    const auto square_profile = residue_profile(laurent({0, 0, 1}, 0, f5), f5);
    CHECK(square_profile == std::map<u64, u64>{{0, 1}, {1, 2}, {4, 2}});

    const auto laurent_profile = residue_profile(laurent({0, 0, 1}, 2, f5), f5);
    CHECK(laurent_profile == std::map<u64, u64>{{0, 1}, {3, 2}, {4, 1}});
}

TEST_CASE("count equals number of profile keys and multiplicities sum to the domain") {
    std::mt19937_64 rng(3);
    for (u64 p : {5ull, 7ull, 11ull, 13ull, 101ull}) {
        PrimeField fld(p);
        std::uniform_int_distribution<i64> coeff(-6, 6);
        for (int trial = 0; trial < 40; ++trial) {
            const LaurentPoly f =
                laurent({coeff(rng), coeff(rng), coeff(rng), 1}, coeff(rng), fld);
            const auto profile = residue_profile(f, fld);
            CHECK(residue_count(f, fld) == profile.size());
            u64 total = 0;
            for (const auto& [value, multiplicity] : profile) total += multiplicity;
            CHECK(total == (f.c == 0 ? p : p - 1));
            CHECK(residue_count(f, fld) == oracle_count(f, fld));
        }
    }
}

TEST_CASE("shift invariance: V_p(f + k) = V_p(f)") {
    PrimeField fld(31);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> coeff(-10, 10);
    for (int trial = 0; trial < 30; ++trial) {
        const i64 c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng), cl = coeff(rng);
        const i64 shift = coeff(rng);
        const auto base = laurent({c0, c1, c2, 1}, cl, fld);
        const auto shifted = laurent({c0 + shift, c1, c2, 1}, cl, fld);
        CHECK(residue_count(base, fld) == residue_count(shifted, fld));
    }
}

TEST_CASE("argument scaling: V_p of f(ux) with c -> c/u is unchanged") {
    PrimeField fld(37);
    for (i64 u = 1; u < 37; ++u) {
        // f(x) = x^2 + 5x + 7/x  ->  f(ux) = u^2 x^2 + 5u x + (7/u)/x
        const auto f = laurent({0, 5, 1}, 7, fld);
        const u64 ur = fld.reduce(u);
        const LaurentPoly g{
            PolyZp::from_residues({0, fld.mul(5, ur), fld.mul(ur, ur)}),
            fld.mul(7, fld.inv(ur))};
        CHECK(residue_count(f, fld) == residue_count(g, fld));
    }
}

TEST_CASE("Theorem 2.1(i) instances: V_p(x^2 + 2a/x) = (2p-1)/3 for p = 2 (mod 3)") {
    for (u64 p : primes_in_range(5, 200)) {
        if (p % 3 != 2) continue;
        PrimeField fld(p);
        for (i64 a = 1; a <= 3; ++a) {
            CHECK(residue_count(laurent({0, 0, 1}, 2 * a, fld), fld) == (2 * p - 1) / 3);
        }
    }
}

TEST_CASE("pure polynomial sweeps the full domain including x = 0") {
    PrimeField f7(7);
    // x^3: bijective for p = 1 (mod 3)? No; 7 = 1 (mod 3) so cubes hit (p-1)/3 + 1 values.
    CHECK(residue_count(laurent({0, 0, 0, 1}, 0, f7), f7) == 3);
    // x: trivially all p residues
    CHECK(residue_count(laurent({0, 1}, 0, f7), f7) == 7);
}

TEST_CASE("p <= 3 rejected") {
    PrimeField f3(3);
    CHECK_THROWS_AS(residue_count(laurent({0, 1}, 0, f3), f3), WrongResidueClass);
}
