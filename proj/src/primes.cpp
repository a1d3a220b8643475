#include "residue_spectra/primes.hpp"

#include "residue_spectra/errors.hpp"

namespace residue_spectra {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Strong-probable-prime test to base a (n odd, n-1 = d * 2^s).
bool sprp(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!sprp(n, a, d, s)) return false;
    }
    return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    if (hi >= (1ull << 31)) throw OutOfRange("primes_in_range: hi must be below 2^31");
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<std::uint8_t> composite(hi + 1, 0);
    for (u64 i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= hi; j += i) composite[j] = 1;
    }
    for (u64 n = lo < 2 ? 2 : lo; n <= hi; ++n) {
        if (!composite[n]) out.push_back(n);
    }
    return out;
}

} // namespace residue_spectra
