#include "residue_spectra/eta_series.hpp"

#include <string>
#include <utility>

namespace residue_spectra {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct SparseTerm {
    u64 exponent;
    int sign;
};

// Generalized pentagonal exponents scale*j(3j-+1)/2 with sign (-1)^j.
std::vector<SparseTerm> pentagonal_terms(u64 scale, u64 nmax) {
    std::vector<SparseTerm> terms{{0, 1}};
    for (u64 j = 1;; ++j) {
        const u64 g1 = scale * (j * (3 * j - 1) / 2);
        if (g1 > nmax) break;
        const int sign = j % 2 == 0 ? 1 : -1;
        terms.push_back({g1, sign});
        const u64 g2 = scale * (j * (3 * j + 1) / 2);
        if (g2 <= nmax) terms.push_back({g2, sign});
    }
    return terms;
}

i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("eta-product coefficient overflowed");
    return out;
}

// In-place multiply of a dense series by a pentagonal factor. The factor's
// constant term is 1, so running the index downward keeps the untouched
// lower entries as the pre-multiplication values the update needs.
void multiply_by_factor(std::vector<i64>& acc, const std::vector<SparseTerm>& terms) {
    const u64 top = acc.size() - 1;
    for (u64 i = top;; --i) {
        i64 v = acc[i];
        for (std::size_t t = 1; t < terms.size(); ++t) {
            const auto& [e, sign] = terms[t];
            if (e > i) break;
            const i64 lower = acc[i - e];
            v = checked_add(v, sign > 0 ? lower : -lower);
        }
        acc[i] = v;
        if (i == 0) break;
    }
}

} // namespace

i64 QSeries::at(u64 n) const {
    if (n >= coeffs.size()) {
        throw CutoffExceeded("QSeries: index " + std::to_string(n) + " beyond cutoff " +
                             std::to_string(cutoff()));
    }
    return coeffs[n];
}

QSeries euler_series(u64 scale, u64 nmax) {
    QSeries s;
    s.coeffs.assign(nmax + 1, 0);
    for (const auto& [e, sign] : pentagonal_terms(scale, nmax)) s.coeffs[e] = sign;
    return s;
}

EtaSpec EtaSpec::level(int n) {
    switch (n) {
        case 14:
            return {{{1, 1}, {2, 1}, {7, 1}, {14, 1}}};
        case 15:
            return {{{1, 1}, {3, 1}, {5, 1}, {15, 1}}};
        case 20:
            return {{{2, 2}, {10, 2}}};
        case 24:
            return {{{2, 1}, {4, 1}, {6, 1}, {12, 1}}};
        default:
            throw Error("EtaSpec: unsupported level " + std::to_string(n));
    }
}

QSeries eta_product(const EtaSpec& spec, u64 nmax) {
    if (nmax < 1) throw OutOfRange("eta_product: nmax must be at least 1");
    // Expand the product part to nmax-1; index n of the result then holds
    // the coefficient of q^n after the leading-q shift.
    std::vector<i64> acc(nmax, 0);
    acc[0] = 1;
    for (const auto& factor : spec.factors) {
        const auto terms = pentagonal_terms(factor.scale, nmax - 1);
        for (unsigned rep = 0; rep < factor.exponent; ++rep) multiply_by_factor(acc, terms);
    }
    QSeries out;
    out.coeffs.assign(nmax + 1, 0);
    for (u64 n = 1; n <= nmax; ++n) out.coeffs[n] = acc[n - 1];
    return out;
}

EtaCache::EtaCache(u64 cutoff) : cutoff_(cutoff) {
    const int levels[4] = {14, 15, 20, 24};
    for (int i = 0; i < 4; ++i) {
        series_[i] = eta_product(EtaSpec::level(levels[i]), cutoff);
    }
}

i64 EtaCache::at(int level, u64 n) const {
    int idx;
    switch (level) {
        case 14: idx = 0; break;
        case 15: idx = 1; break;
        case 20: idx = 2; break;
        case 24: idx = 3; break;
        default: throw Error("EtaCache: unsupported level " + std::to_string(level));
    }
    if (n > cutoff_) {
        throw CutoffExceeded("EtaCache: n = " + std::to_string(n) + " beyond cutoff " +
                             std::to_string(cutoff_));
    }
    return series_[idx].coeffs[n];
}

} // namespace residue_spectra
