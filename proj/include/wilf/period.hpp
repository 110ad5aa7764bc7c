#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wilf/errors.hpp"
#include "wilf/fq_poly.hpp"
#include "wilf/int_poly.hpp"
#include "wilf/modular.hpp"
#include "wilf/parallel.hpp"
#include "wilf/primes.hpp"

namespace wilf {

/// One reconstruction prime q == 1 (mod p^2) together with a fixed element
/// zeta of exact multiplicative order p^2 in F_q (the image of omega).
struct CrtPrime {
    uint64_t q = 0;
    uint64_t zeta = 0;
};

struct PeriodOptions {
    unsigned threads = 0;            // 0 = hardware concurrency
    uint64_t min_q = uint64_t(1) << 20;
    std::optional<uint64_t> g;       // override the canonical primitive root
    bool sequential_products = false;
};

/// Upper bound on |coefficient of x^{p-k}| in L(p,x): each eta is a sum of
/// p-1 roots of unity, so the k-th elementary symmetric function is at most
/// C(p,k) (p-1)^k. The max over k sits at k = p-1.
inline mpz_class coefficient_bound(unsigned long p) {
    if (p < 5) throw InvalidParamsError("coefficient_bound: p must be >= 5");
    mpz_class best(0);
    for (unsigned long k = 0; k <= p; ++k) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p - 1, k);
        mpz_class candidate = binomial(p, k) * pw;
        if (candidate > best) best = candidate;
    }
    return best;
}

/// Smallest primes q == 1 (mod p^2) above min_q, enough that their product
/// exceeds 2^{bits_needed+1}. zeta_q is the image of the smallest primitive
/// root of F_q raised to (q-1)/p^2; exact order p^2 is checked (the order
/// divides p^2, so zeta^p != 1 suffices).
inline std::vector<CrtPrime> find_crt_primes(unsigned long p, unsigned long bits_needed,
                                             uint64_t min_q = uint64_t(1) << 20) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    std::vector<CrtPrime> out;
    mpz_class product(1);
    uint64_t m = min_q / p2 + 1;
    while (mpz_sizeinbase(product.get_mpz_t(), 2) < bits_needed + 2) {
        uint64_t q = m * p2 + 1;
        if (q > min_q && is_prime_u64(q)) {
            uint64_t w = smallest_primitive_root_mod_prime(q);
            uint64_t zeta = pow_mod(w, (q - 1) / p2, q);
            if (pow_mod(zeta, p2, q) != 1 || pow_mod(zeta, p2 / p, q) == 1)
                throw ComputeError("find_crt_primes: zeta order is not exactly p^2");
            out.push_back({q, zeta});
            product *= mpz_class(static_cast<unsigned long>(q));
        }
        ++m;
    }
    return out;
}

/// Next valid CRT prime strictly above every q in `used` (for fresh-prime
/// spot checks that must be independent of the reconstruction set).
inline CrtPrime fresh_crt_prime(unsigned long p, const std::vector<uint64_t>& used,
                                uint64_t min_q = uint64_t(1) << 20) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    uint64_t floor_q = min_q;
    for (uint64_t q : used) floor_q = std::max(floor_q, q);
    uint64_t m = floor_q / p2 + 1;
    for (;; ++m) {
        uint64_t q = m * p2 + 1;
        if (q <= floor_q || !is_prime_u64(q)) continue;
        uint64_t w = smallest_primitive_root_mod_prime(q);
        uint64_t zeta = pow_mod(w, (q - 1) / p2, q);
        if (pow_mod(zeta, p2, q) == 1 && pow_mod(zeta, p2 / p, q) != 1) return {q, zeta};
    }
}

namespace detail {

/// Table of zeta^e for e in [0, p^2).
inline std::vector<uint64_t> zeta_powers(const CrtPrime& cp, uint64_t p2) {
    std::vector<uint64_t> t(p2);
    t[0] = 1;
    for (uint64_t e = 1; e < p2; ++e) t[e] = mul_mod(t[e - 1], cp.zeta, cp.q);
    return t;
}

/// Orbit {g^{pj} mod p^2 : j = 0..p-2} of the index-p subgroup generator.
inline std::vector<uint64_t> power_orbit(unsigned long p, uint64_t g) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    uint64_t gp = pow_mod(g, p, p2);
    std::vector<uint64_t> orbit(p - 1);
    orbit[0] = 1;
    for (unsigned long j = 1; j + 1 < p; ++j) orbit[j] = orbit[j - 1] * gp % p2;
    return orbit;
}

inline std::vector<uint64_t> periods_from_orbit(const CrtPrime& cp, unsigned long p,
                                                std::span<const uint64_t> orbit) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    std::vector<uint64_t> zt = zeta_powers(cp, p2);
    uint64_t gp = orbit.size() > 1 ? orbit[1] : 1;  // orbit[1] = g^p mod p^2
    std::vector<uint64_t> eta(p);
    for (unsigned long n = 1; n <= p; ++n) {
        uint64_t base = (gp + static_cast<uint64_t>(p) * n) % p2;
        uint64_t acc = 0;
        for (uint64_t o : orbit) acc = add_mod(acc, zt[o * base % p2], cp.q);
        eta[n - 1] = acc;
    }
    return eta;
}

}  // namespace detail

/// The p Gaussian periods eta_1..eta_p mod q:
///   eta_n = sum_{j=0}^{p-2} zeta^{g^{pj}(g^p + pn) mod p^2}.
inline std::vector<uint64_t> periods_mod_q(const CrtPrime& cp, unsigned long p, uint64_t g) {
    return detail::periods_from_orbit(cp, p, detail::power_orbit(p, g));
}

/// rho_k = sum_{j=1}^{p-1} zeta^{(1-pk) j^p mod p^2}, the eigenvalues of the
/// circulant B.
inline uint64_t rho_k_mod_q(unsigned long p, unsigned long k, const CrtPrime& cp) {
    if (k > p - 1) throw InvalidParamsError("rho_k_mod_q: k out of range");
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    uint64_t factor = (p2 + 1 - static_cast<uint64_t>(p) * k % p2) % p2;  // (1 - pk) mod p^2
    uint64_t acc = 0;
    for (unsigned long j = 1; j < p; ++j) {
        uint64_t jp = pow_mod(j, p, p2);
        acc = add_mod(acc, pow_mod(cp.zeta, factor * jp % p2, cp.q), cp.q);
    }
    return acc;
}

namespace detail {

inline uint64_t canonical_root(unsigned long p, const PeriodOptions& opts) {
    if (opts.g) {
        if (!is_primitive_root_mod_p2(*opts.g, p))
            throw NotPrimitiveRootError("g = " + std::to_string(*opts.g) +
                                        " is not a primitive root mod p^2");
        return *opts.g;
    }
    return primitive_root_mod_p2(p);
}

}  // namespace detail

/// A prime p together with everything the exact reconstruction needs: the
/// primitive root, the CRT primes with their order-p^2 roots of unity, the
/// combined modulus (exceeds twice the target bound), and the precomputed
/// orbit table {g^{pj} mod p^2}. Immutable after creation; safe to share
/// across the per-prime workers.
struct PeriodContext {
    unsigned long p = 0;
    uint64_t g = 0;
    std::vector<CrtPrime> primes;
    mpz_class modulus;
    std::vector<uint64_t> orbit;

    static PeriodContext create(unsigned long p, const mpz_class& bound,
                                const PeriodOptions& opts = {}) {
        if (p < 5 || !is_prime_u64(p))
            throw InvalidParamsError("PeriodContext: p must be a prime >= 5");
        PeriodContext ctx;
        ctx.p = p;
        ctx.g = detail::canonical_root(p, opts);
        ctx.primes = find_crt_primes(p, mpz_sizeinbase(bound.get_mpz_t(), 2), opts.min_q);
        ctx.modulus = 1;
        for (const CrtPrime& cp : ctx.primes)
            ctx.modulus *= mpz_class(static_cast<unsigned long>(cp.q));
        ctx.orbit = detail::power_orbit(p, ctx.g);
        return ctx;
    }

    std::vector<uint64_t> periods(std::size_t prime_index) const {
        return detail::periods_from_orbit(primes[prime_index], p, orbit);
    }
};

/// L(p,x) as an exact integer polynomial: per-prime expansion of
/// prod (x - eta_n) followed by symmetric-range CRT per coefficient.
inline IntPolynomial L_exact(unsigned long p, const PeriodOptions& opts = {}) {
    mpz_class bound = coefficient_bound(p);
    PeriodContext ctx = PeriodContext::create(p, bound, opts);

    std::vector<std::vector<uint64_t>> per_prime(ctx.primes.size());
    parallel_for(ctx.primes.size(), opts.threads, [&](std::size_t i) {
        std::vector<uint64_t> eta = ctx.periods(i);
        fq::Poly poly = opts.sequential_products
                            ? fq::from_roots_sequential(eta, ctx.primes[i].q)
                            : fq::from_roots(eta, ctx.primes[i].q);
        if (poly.size() != p + 1)
            throw ComputeError("L_exact: per-prime product has wrong degree");
        per_prime[i] = std::move(poly);
    });

    IntPolynomial L;
    L.coeffs.resize(p + 1);
    std::vector<Residue> residues(ctx.primes.size());
    for (unsigned long c = 0; c <= p; ++c) {
        for (std::size_t i = 0; i < ctx.primes.size(); ++i)
            residues[i] = Residue(mpz_class(static_cast<unsigned long>(per_prime[i][c])),
                                  mpz_class(static_cast<unsigned long>(ctx.primes[i].q)));
        L.coeffs[c] = crt_combine(residues);
        if (abs(L.coeffs[c]) > bound)
            throw InsufficientModulusError("L_exact: coefficient exceeds the a priori bound");
    }
    if (L.coeffs[p] != 1) throw ComputeError("L_exact: result is not monic");
    if (L.coeffs[p - 1] != 0) throw ComputeError("L_exact: x^{p-1} coefficient is nonzero");
    return L;
}

/// Constant term L(p,0) alone: per-prime product of (-eta_n), no polynomial
/// expansion. Scales to p = 1093.
inline mpz_class L_constant_term(unsigned long p, const PeriodOptions& opts = {}) {
    mpz_class bound;  // |L(p,0)| = prod |eta_n| <= (p-1)^p
    mpz_ui_pow_ui(bound.get_mpz_t(), p - 1, p);
    PeriodContext ctx = PeriodContext::create(p, bound, opts);

    std::vector<uint64_t> per_prime(ctx.primes.size());
    parallel_for(ctx.primes.size(), opts.threads, [&](std::size_t i) {
        uint64_t q = ctx.primes[i].q;
        uint64_t acc = 1;
        for (uint64_t e : ctx.periods(i)) acc = mul_mod(acc, sub_mod(0, e, q), q);
        per_prime[i] = acc;
    });

    std::vector<Residue> residues;
    residues.reserve(ctx.primes.size());
    for (std::size_t i = 0; i < ctx.primes.size(); ++i)
        residues.emplace_back(mpz_class(static_cast<unsigned long>(per_prime[i])),
                              mpz_class(static_cast<unsigned long>(ctx.primes[i].q)));
    return crt_combine(residues);
}

/// Spot check: reduce a claimed L(p,x) modulo a prime not used to build it
/// and compare against the directly expanded period product mod that prime.
inline bool verify_mod_fresh_prime(const IntPolynomial& L, unsigned long p, const CrtPrime& fresh,
                                   std::optional<uint64_t> g_override = std::nullopt) {
    uint64_t g = g_override.value_or(primitive_root_mod_p2(p));
    std::vector<uint64_t> eta = periods_mod_q(fresh, p, g);
    fq::Poly direct = fq::from_roots_sequential(eta, fresh.q);
    fq::Poly reduced = L.mod(fresh.q);
    return direct == reduced;
}

/// The eta multiset is a Galois orbit, so L must not depend on which
/// primitive root generated it.
inline bool primitive_root_independence(unsigned long p, uint64_t g1, uint64_t g2) {
    if (!is_primitive_root_mod_p2(g1, p) || !is_primitive_root_mod_p2(g2, p))
        throw NotPrimitiveRootError("primitive_root_independence: not a primitive root mod p^2");
    PeriodOptions o1;
    o1.g = g1;
    PeriodOptions o2;
    o2.g = g2;
    return L_exact(p, o1) == L_exact(p, o2);
}

}  // namespace wilf
