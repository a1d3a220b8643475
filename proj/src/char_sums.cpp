#include "residue_spectra/char_sums.hpp"

namespace residue_spectra {

CurveCount curve_point_count(u64 m, u64 n, const PrimeField& fld) {
    const u64 p = fld.p();
    if (p <= 3) throw WrongResidueClass("curve_point_count: requires p > 3");
    m %= p;
    n %= p;
    const auto& qr = fld.qr_table();
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        const u64 v = fld.add(fld.mul(fld.add(fld.mul(x, x), m), x), n); // x^3 + mx + n
        if (v != 0) sum += qr[v] ? 1 : -1;
    }
    CurveCount cc;
    cc.m = m;
    cc.n = n;
    cc.p = p;
    cc.count = static_cast<i64>(p) + 1 + sum;
    const u64 disc = fld.add(fld.mul(4, fld.mul(m, fld.mul(m, m))), fld.mul(27, fld.mul(n, n)));
    cc.singular = disc == 0;
    return cc;
}

i64 jacobsthal_cubic_sum(u64 m, const PrimeField& fld) {
    const u64 p = fld.p();
    m %= p;
    if (m == 0) throw ZeroParameter("jacobsthal_cubic_sum: m divisible by p");
    const auto& qr = fld.qr_table();
    i64 sum = 0;
    for (u64 x = 1; x < p; ++x) {
        const u64 v = fld.mul(x, fld.add(fld.mul(x, fld.mul(x, x)), m)); // x(x^3 + m)
        if (v != 0) sum += qr[v] ? 1 : -1;
    }
    return sum;
}

int epsilon_p(u64 t, const PrimeField& fld) {
    const u64 p = fld.p();
    t %= p;
    if (t == 0) throw ZeroParameter("epsilon_p: t divisible by p");
    const auto& qr = fld.qr_table();
    const u64 a = fld.sub(0, fld.mul(3, t));     // -3t
    const u64 b = fld.mul(3, fld.mul(t, t));     // 3t^2
    int count = 0;
    for (u64 x = 1; x < p; ++x) {
        const u64 v = fld.add(fld.mul(fld.add(fld.mul(x, x), a), x), b);
        if (v != 0) continue;
        const u64 sx = fld.mul(6 % p, x);
        if (sx != 0 && !qr[sx]) ++count;
    }
    return count;
}

int delta_k(u64 k, const PrimeField& fld) {
    const u64 p = fld.p();
    k %= p;
    if (k == 0) throw ZeroParameter("delta_k: k divisible by p");
    const auto& qr = fld.qr_table();
    const u64 a = fld.mul(4, k);                 // 4k
    const u64 b = fld.mul(8 % p, fld.mul(k, k)); // 8k^2
    int count = 0;
    for (u64 x = 1; x < p; ++x) {
        const u64 v = fld.add(fld.mul(fld.add(fld.mul(x, x), a), x), b);
        if (v == 0 && !qr[x]) ++count;
    }
    return count;
}

int delta_mod40(const PrimeField& fld) {
    const u64 p = fld.p();
    if (p % 4 != 3) {
        throw WrongResidueClass("delta_mod40: requires p = 3 (mod 4)");
    }
    switch (p % 40) {
        case 7:
        case 23:
            return 0;
        case 3:
        case 27:
        case 31:
        case 39:
            return 1;
        case 11:
        case 19:
            return 2;
        default:
            throw WrongResidueClass("delta_mod40: p mod 40 outside the table");
    }
}

} // namespace residue_spectra
