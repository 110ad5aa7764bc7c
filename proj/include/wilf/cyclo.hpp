#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wilf/bigfloat.hpp"
#include "wilf/dedekind.hpp"
#include "wilf/errors.hpp"
#include "wilf/int_poly.hpp"
#include "wilf/numeric_poly.hpp"
#include "wilf/period.hpp"
#include "wilf/primes.hpp"

namespace wilf {

/// A(r,k,n) = sum over h in [1,k), gcd(h,k)=1, of
/// exp{pi i s(r,h,k) - 2 pi i h n / k}, evaluated at working precision.
/// The whole phase is assembled as one exact rational and reduced mod 2
/// before it ever meets a floating-point number.
inline Cplx A_numeric(unsigned long r, unsigned long k, long n, const PrecisionConfig& cfg) {
    cfg.validate();
    if (k < 2) throw KTooSmallError("A_numeric: k must be >= 2");
    if (r % 2 != 0) throw InvalidParamsError("A_numeric: r must be even");
    Cplx acc(cfg.bits);
    for (unsigned long h = 1; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational s = dedekind_sum({r, mpz_class(h), mpz_class(k)});
        Rational phase = s - Rational(2 * mpz_class(h) * n, mpz_class(k));
        acc += exp_i_pi(phase, cfg.bits);
    }
    return acc;
}

/// The closed form from the Galois-orbit derivation:
///   A(p-3,p,n) = (-1)^{(p^2-1)/8} sum_{h=1}^{p-1} omega^{(v-pn)h^p}.
inline Cplx A_trace_form(unsigned long p, long n, const PrecisionConfig& cfg,
                         unsigned long exact_cap = kExactBernoulliCap) {
    cfg.validate();
    mpz_class p2 = mpz_class(p) * p;
    Residue v = compute_v(p, exact_cap);
    mpz_class shift;
    mpz_mod(shift.get_mpz_t(), mpz_class(v.value - mpz_class(p) * n).get_mpz_t(), p2.get_mpz_t());
    Cplx acc(cfg.bits);
    for (unsigned long h = 1; h < p; ++h) {
        mpz_class e = shift * mod_pow(mpz_class(h), mpz_class(p), p2).value % p2;
        acc += exp_2pi_i(e, p2, cfg.bits);
    }
    bool negate = ((p * p - 1) / 8) % 2 == 1;
    return negate ? -acc : acc;
}

/// Gaussian period eta_n = sum_{j=0}^{p-2} exp{2 pi i g^{pj}(g^p + pn)/p^2}.
inline Cplx eta_numeric(unsigned long p, long n, uint64_t g, const PrecisionConfig& cfg) {
    cfg.validate();
    if (p < 5 || !is_prime_u64(p)) throw InvalidParamsError("eta_numeric: p must be a prime >= 5");
    if (!is_primitive_root_mod_p2(g, p))
        throw NotPrimitiveRootError("eta_numeric: g is not a primitive root mod p^2");
    int64_t p2 = static_cast<int64_t>(p) * static_cast<int64_t>(p);
    int64_t gp = static_cast<int64_t>(pow_mod(g, p, static_cast<uint64_t>(p2)));
    int64_t base = (gp + static_cast<int64_t>(p) * n) % p2;
    if (base < 0) base += p2;
    std::vector<uint64_t> orbit = detail::power_orbit(p, g);
    Cplx acc(cfg.bits);
    for (uint64_t o : orbit) {
        mpz_class e(static_cast<unsigned long>(o * static_cast<uint64_t>(base) %
                                               static_cast<uint64_t>(p2)));
        acc += exp_2pi_i(e, mpz_class(static_cast<long>(p2)), cfg.bits);
    }
    return acc;
}

namespace detail {

template <typename RootFn>
IntPolynomial round_with_retries(unsigned long count, const PrecisionConfig& cfg, RootFn&& root_at) {
    mpfr_prec_t bits = cfg.bits;
    for (unsigned attempt = 0;; ++attempt) {
        std::vector<Cplx> roots;
        roots.reserve(count);
        for (unsigned long n = 1; n <= count; ++n) roots.push_back(root_at(n, bits));
        NumericPolynomial np = poly_from_roots(roots, bits);
        try {
            return round_to_int_poly(np, cfg.tau);
        } catch (const RoundingFailureError&) {
            if (attempt >= cfg.max_retries) throw;
            bits *= 2;
        }
    }
}

}  // namespace detail

/// W(r,k,x) rounded to integers. Refuses unless Dokshitzer's condition
/// (r+1,k) = (r+1,phi(k)) = 1 holds, since only then are integer
/// coefficients guaranteed.
inline IntPolynomial wilf_numeric(unsigned long r, unsigned long k, const PrecisionConfig& cfg) {
    cfg.validate();
    if (k < 2) throw KTooSmallError("wilf_numeric: k must be >= 2");
    if (r % 2 != 0) throw InvalidParamsError("wilf_numeric: r must be even");
    unsigned long r1 = r + 1;
    if (std::gcd(r1, k) != 1 || std::gcd(r1, euler_totient(k)) != 1)
        throw IntegralityConditionUnmetError(
            "wilf_numeric: (r+1,k) = (r+1,phi(k)) = 1 fails for r=" + std::to_string(r) +
            ", k=" + std::to_string(k));
    return detail::round_with_retries(k, cfg, [&](unsigned long n, mpfr_prec_t bits) {
        PrecisionConfig c = cfg;
        c.bits = bits;
        return A_numeric(r, k, static_cast<long>(n), c);
    });
}

/// L(p,x) through the floating periods; the independent cross-check of the
/// exact CRT route.
inline IntPolynomial L_numeric(unsigned long p, const PrecisionConfig& cfg) {
    cfg.validate();
    if (p < 5 || !is_prime_u64(p)) throw InvalidParamsError("L_numeric: p must be a prime >= 5");
    uint64_t g = primitive_root_mod_p2(p);
    return detail::round_with_retries(p, cfg, [&](unsigned long n, mpfr_prec_t bits) {
        PrecisionConfig c = cfg;
        c.bits = bits;
        return eta_numeric(p, static_cast<long>(n), g, c);
    });
}

/// Which side of Theorem 1 holds.
enum class SignCase {
    Plus,   // W(p-3,p,x) = L(p,x),   p == +-1 (mod 8)
    Minus,  // W(p-3,p,x) = -L(p,-x), p == +-3 (mod 8)
};

inline const char* to_string(SignCase c) {
    return c == SignCase::Plus ? "PlusCase" : "MinusCase";
}

/// Computes W(p-3,p,x) numerically, L(p,x) exactly, decides which identity
/// of Theorem 1 holds, and checks the outcome against p mod 8.
inline SignCase check_theorem1(unsigned long p, const PrecisionConfig& cfg) {
    IntPolynomial W = wilf_numeric(p - 3, p, cfg);
    IntPolynomial L = L_exact(p);
    SignCase found;
    if (W == L)
        found = SignCase::Plus;
    else if (W == L.reflected_negated())
        found = SignCase::Minus;
    else
        throw TheoremViolationError("check_theorem1: neither identity holds for p=" +
                                    std::to_string(p));
    unsigned long m = p % 8;
    bool plus_expected = (m == 1 || m == 7);
    if ((found == SignCase::Plus) != plus_expected)
        throw TheoremViolationError("check_theorem1: sign case disagrees with p mod 8 for p=" +
                                    std::to_string(p));
    return found;
}

}  // namespace wilf
