#include "residue_spectra/residue_counts.hpp"

namespace residue_spectra {

namespace {

// All inverses 1..p-1 in one O(p) pass: inv[i] = -(p/i) * inv[p mod i].
void fill_inverse_table(const PrimeField& fld, std::vector<u64>& inv) {
    const u64 p = fld.p();
    inv.assign(p, 0);
    inv[1] = 1;
    for (u64 i = 2; i < p; ++i) {
        inv[i] = fld.mul(p - p / i, inv[p % i]);
    }
}

template <typename Visit>
void sweep_values(const LaurentPoly& f, const PrimeField& fld, Visit&& visit) {
    const u64 p = fld.p();
    if (p <= 3) throw WrongResidueClass("residue_count: requires p > 3");
    if (f.c == 0) {
        for (u64 x = 0; x < p; ++x) visit(f.poly.eval(x, fld));
        return;
    }
    thread_local std::vector<u64> inv;
    if (inv.size() != p) fill_inverse_table(fld, inv);
    for (u64 x = 1; x < p; ++x) {
        visit(fld.add(f.poly.eval(x, fld), fld.mul(f.c, inv[x])));
    }
}

} // namespace

LaurentPoly LaurentPoly::make(std::span<const i64> coeffs, i64 c, const PrimeField& fld) {
    return LaurentPoly{PolyZp::from_coeffs(coeffs, fld), fld.reduce(c)};
}

u64 residue_count(const LaurentPoly& f, const PrimeField& fld) {
    thread_local std::vector<std::uint8_t> seen;
    seen.assign(fld.p(), 0);
    u64 count = 0;
    sweep_values(f, fld, [&](u64 value) {
        if (!seen[value]) {
            seen[value] = 1;
            ++count;
        }
    });
    return count;
}

std::map<u64, u64> residue_profile(const LaurentPoly& f, const PrimeField& fld) {
    std::map<u64, u64> fibers;
    sweep_values(f, fld, [&](u64 value) { ++fibers[value]; });
    return fibers;
}

} // namespace residue_spectra
