#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "wilf/errors.hpp"

namespace wilf {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : m - (b - a);
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// a^{-1} mod m (m need not be prime), via extended Euclid.
inline uint64_t inv_mod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    uint64_t r = m, nr = a % m;
    while (nr != 0) {
        uint64_t q = r / nr;
        int64_t tmp_t = t - static_cast<int64_t>(q) * nt;
        t = nt; nt = tmp_t;
        uint64_t tmp_r = r - q * nr;
        r = nr; nr = tmp_r;
    }
    if (r != 1) throw NotInvertibleError("inv_mod: not invertible");
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

namespace detail {

inline bool miller_rabin_u64(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

/// Deterministic for n < 2^64 via the fixed 12-witness Miller-Rabin set.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!detail::miller_rabin_u64(n, a)) return false;
    return true;
}

/// Deterministic and correct below 2^64; 40 Miller-Rabin style rounds above
/// (only optional scans ever get there).
inline bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Prime factorization by trial division; desk scale only.
inline std::map<uint64_t, unsigned> factorize(uint64_t n) {
    std::map<uint64_t, unsigned> f;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) { ++f[d]; n /= d; }
    }
    if (n > 1) ++f[n];
    return f;
}

inline uint64_t euler_totient(uint64_t k) {
    if (k == 0) throw DomainError("euler_totient: k must be positive");
    uint64_t phi = k;
    for (const auto& [p, e] : factorize(k)) phi -= phi / p;
    return phi;
}

/// True iff g generates a cyclic group of the given (factored) order mod m.
inline bool has_order(uint64_t g, uint64_t order, uint64_t m,
                      const std::map<uint64_t, unsigned>& order_factors) {
    if (pow_mod(g, order, m) != 1) return false;
    for (const auto& [p, e] : order_factors)
        if (pow_mod(g, order / p, m) == 1) return false;
    return true;
}

/// Smallest generator of (Z/p^2)^x. Deterministic canonical choice.
inline uint64_t primitive_root_mod_p2(uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) throw DomainError("primitive_root_mod_p2: p must be an odd prime");
    uint64_t p2 = p * p;
    uint64_t order = p * (p - 1);
    auto factors = factorize(order);
    for (uint64_t g = 2; g < p2; ++g)
        if (has_order(g, order, p2, factors)) return g;
    throw ComputeError("primitive_root_mod_p2: no generator found");  // unreachable
}

inline bool is_primitive_root_mod_p2(uint64_t g, uint64_t p) {
    uint64_t order = p * (p - 1);
    return g % (p * p) != 0 && has_order(g % (p * p), order, p * p, factorize(order));
}

/// Smallest primitive root of the prime field F_q.
inline uint64_t smallest_primitive_root_mod_prime(uint64_t q) {
    auto factors = factorize(q - 1);
    for (uint64_t g = 2; g < q; ++g)
        if (has_order(g, q - 1, q, factors)) return g;
    throw ComputeError("smallest_primitive_root_mod_prime: no generator found");
}

}  // namespace wilf
