#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wilf/period.hpp"

using namespace wilf;

namespace {

// Independent oracle: periods summed in double precision straight from the
// defining exponential sum, polynomial expanded with std::complex.
std::vector<long> L_double_oracle(unsigned long p) {
    uint64_t p2 = p * p;
    uint64_t g = primitive_root_mod_p2(p);
    uint64_t gp = pow_mod(g, p, p2);
    std::vector<std::complex<double>> eta(p);
    for (unsigned long n = 1; n <= p; ++n) {
        std::complex<double> s = 0;
        uint64_t oj = 1;
        for (unsigned long j = 0; j + 1 < p; ++j) {
            uint64_t e = oj * ((gp + p * n) % p2) % p2;
            s += std::polar(1.0, 2 * M_PI * double(e) / double(p2));
            oj = oj * gp % p2;
        }
        eta[n - 1] = s;
    }
    std::vector<std::complex<double>> poly{1.0};
    for (auto& root : eta) {
        std::vector<std::complex<double>> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<long> out;
    for (auto& c : poly) out.push_back(std::lround(c.real()));
    return out;
}

IntPolynomial from_longs(const std::vector<long>& v) {
    IntPolynomial p;
    for (long c : v) p.coeffs.emplace_back(c);
    return p;
}

}  // namespace

TEST(CoefficientBound, ValuesAndCoverage) {
    // max_k C(p,k)(p-1)^k peaks at k = p-1, i.e. p (p-1)^{p-1}
    mpz_class b7 = coefficient_bound(7);
    mpz_class expect7;
    mpz_ui_pow_ui(expect7.get_mpz_t(), 6, 6);
    expect7 *= 7;
    EXPECT_EQ(b7, expect7);
    EXPECT_GE(b7, 279936);  // 6^7 (the k = p term)
    EXPECT_GE(b7, 97);      // |L(7,0)|

    mpz_class b5 = coefficient_bound(5);
    EXPECT_EQ(b5, 1280);  // 5 * 4^4
    EXPECT_GE(b5, 1024);  // 4^5
}

TEST(FindCrtPrimes, DeskExamples) {
    auto ps5 = find_crt_primes(5, 8, 64);
    ASSERT_FALSE(ps5.empty());
    EXPECT_EQ(ps5[0].q, 101u);  // first prime == 1 (mod 25) above 64

    auto ps7 = find_crt_primes(7, 8, 100);
    ASSERT_FALSE(ps7.empty());
    EXPECT_EQ(ps7[0].q, 197u);  // first prime == 1 (mod 49) above 100
}

TEST(FindCrtPrimes, DefaultFloorAndZetaOrder) {
    auto primes = find_crt_primes(5, 40);
    mpz_class product(1);
    for (const auto& cp : primes) {
        EXPECT_GT(cp.q, uint64_t(1) << 20);
        EXPECT_EQ(cp.q % 25, 1u);
        EXPECT_TRUE(is_prime_u64(cp.q));
        EXPECT_EQ(pow_mod(cp.zeta, 25, cp.q), 1u);
        EXPECT_NE(pow_mod(cp.zeta, 5, cp.q), 1u);
        product *= mpz_class(static_cast<unsigned long>(cp.q));
    }
    mpz_class threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 2, 41);
    EXPECT_GT(product, threshold);
}

TEST(PeriodsModQ, SumVanishes) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        auto primes = find_crt_primes(p, 70);
        uint64_t g = primitive_root_mod_p2(p);
        for (const auto& cp : primes) {
            uint64_t sum = 0;
            for (uint64_t e : periods_mod_q(cp, p, g)) sum = add_mod(sum, e, cp.q);
            EXPECT_EQ(sum, 0u) << "p=" << p << " q=" << cp.q;
        }
    }
}

TEST(PeriodsModQ, ProductIsConstantTermUpToSign) {
    // L(7,0) = -97, so prod eta_n = (-1)^7 L(7,0) = 97
    CrtPrime cp = find_crt_primes(7, 8, 100)[0];
    ASSERT_EQ(cp.q, 197u);
    uint64_t prod = 1;
    for (uint64_t e : periods_mod_q(cp, 7, primitive_root_mod_p2(7)))
        prod = mul_mod(prod, e, cp.q);
    EXPECT_EQ(prod, 97u);
}

TEST(PeriodsModQ, MultisetEqualsRhoMultiset) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        auto primes = find_crt_primes(p, 70);
        ASSERT_GE(primes.size(), 3u);
        uint64_t g = primitive_root_mod_p2(p);
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<uint64_t> eta = periods_mod_q(primes[i], p, g);
            std::vector<uint64_t> rho(p);
            for (unsigned long k = 0; k < p; ++k) rho[k] = rho_k_mod_q(p, k, primes[i]);
            std::sort(eta.begin(), eta.end());
            std::sort(rho.begin(), rho.end());
            EXPECT_EQ(eta, rho) << "p=" << p << " q=" << primes[i].q;
        }
    }
}

TEST(RhoK, SumVanishes) {
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        CrtPrime cp = find_crt_primes(p, 24)[0];
        uint64_t sum = 0;
        for (unsigned long k = 0; k < p; ++k) sum = add_mod(sum, rho_k_mod_q(p, k, cp), cp.q);
        EXPECT_EQ(sum, 0u) << p;
    }
}

TEST(LExact, GoldenP7) {
    IntPolynomial L = L_exact(7);
    IntPolynomial expected = from_longs({-97, -84, 112, 91, -21, -21, 0, 1});
    EXPECT_EQ(L, expected);
    EXPECT_EQ(L.str(), "x^7 - 21*x^5 - 21*x^4 + 91*x^3 + 112*x^2 - 84*x - 97");
}

TEST(LExact, MatchesDoubleOracle) {
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        EXPECT_EQ(L_exact(p), from_longs(L_double_oracle(p))) << p;
    }
}

TEST(LExact, FrozenP5) {
    // derived through the double-precision oracle, frozen here
    EXPECT_EQ(L_exact(5), from_longs({1, 10, 5, -10, 0, 1}));
}

TEST(LExact, StructuralInvariants) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        IntPolynomial L = L_exact(p);
        ASSERT_EQ(L.coeffs.size(), p + 1) << p;
        EXPECT_EQ(L.coeffs[p], 1) << p;
        EXPECT_EQ(L.coeffs[p - 1], 0) << p;
        EXPECT_EQ(L.degree(), static_cast<long>(p)) << p;
        for (unsigned long k = 0; k <= p; ++k) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), p - 1, k);
            EXPECT_LE(abs(L.coeffs[p - k]), binomial(p, k) * pw) << "p=" << p << " k=" << k;
        }
    }
}

TEST(LExact, FreshPrimeSelfVerification) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        IntPolynomial L = L_exact(p);
        auto used = find_crt_primes(p, mpz_sizeinbase(coefficient_bound(p).get_mpz_t(), 2));
        std::vector<uint64_t> used_qs;
        for (const auto& cp : used) used_qs.push_back(cp.q);
        CrtPrime fresh = fresh_crt_prime(p, used_qs);
        for (uint64_t q : used_qs) EXPECT_NE(fresh.q, q);
        EXPECT_TRUE(verify_mod_fresh_prime(L, p, fresh)) << p;
    }
}

TEST(LExact, DeterministicAndThreadCountInvariant) {
    PeriodOptions one;
    one.threads = 1;
    PeriodOptions four;
    four.threads = 4;
    IntPolynomial a = L_exact(13, one);
    IntPolynomial b = L_exact(13, four);
    IntPolynomial c = L_exact(13, one);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(LExact, SequentialProductFallbackAgrees) {
    PeriodOptions seq;
    seq.sequential_products = true;
    EXPECT_EQ(L_exact(11), L_exact(11, seq));
}

TEST(LConstantTerm, AgreesWithFullPolynomial) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 23ul, 37ul, 43ul, 137ul}) {
        EXPECT_EQ(L_constant_term(p), L_exact(p).coeffs[0]) << p;
    }
}

TEST(LConstantTerm, KnownSmallValues) {
    EXPECT_EQ(L_constant_term(7), -97);
    EXPECT_EQ(L_constant_term(11), 243);  // 3^5, the first table row
    EXPECT_EQ(L_constant_term(5), 1);
}

TEST(PrimitiveRootIndependence, HoldsForTwoRoots) {
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        uint64_t g1 = primitive_root_mod_p2(p);
        uint64_t g2 = g1 + 1;
        while (!is_primitive_root_mod_p2(g2, p)) ++g2;
        EXPECT_TRUE(primitive_root_independence(p, g1, g2)) << "p=" << p << " g2=" << g2;
        EXPECT_TRUE(primitive_root_independence(p, g1, g1));
    }
    EXPECT_THROW(primitive_root_independence(7, 2, 3), NotPrimitiveRootError);  // 2 is not one mod 49
}

TEST(PeriodContext, InvariantsHold) {
    for (unsigned long p : {5ul, 13ul}) {
        mpz_class bound = coefficient_bound(p);
        PeriodContext ctx = PeriodContext::create(p, bound);
        EXPECT_EQ(ctx.g, primitive_root_mod_p2(p));
        EXPECT_GT(ctx.modulus, 2 * bound);
        EXPECT_EQ(ctx.orbit.size(), p - 1);
        EXPECT_EQ(ctx.orbit[0], 1u);
        for (const CrtPrime& cp : ctx.primes) {
            EXPECT_EQ(cp.q % (p * p), 1u);
            EXPECT_EQ(pow_mod(cp.zeta, p * p, cp.q), 1u);
            EXPECT_NE(pow_mod(cp.zeta, p, cp.q), 1u);
        }
        for (std::size_t i = 0; i < ctx.primes.size(); ++i)
            EXPECT_EQ(ctx.periods(i), periods_mod_q(ctx.primes[i], p, ctx.g)) << i;
    }
}

TEST(FqPoly, TreeAndSequentialProductsAgree) {
    uint64_t q = 101;
    std::vector<uint64_t> roots = {3, 17, 95, 4, 62, 0, 33, 88, 12, 51, 7};
    EXPECT_EQ(fq::from_roots(roots, q), fq::from_roots_sequential(roots, q));
}

TEST(FqPoly, DivexactAndGcd) {
    uint64_t q = 13;
    fq::Poly a = {1, 2, 1};        // (x+1)^2
    fq::Poly b = {1, 1};           // x+1
    EXPECT_EQ(fq::divexact(a, b, q), b);
    EXPECT_EQ(fq::gcd(a, fq::derivative(a, q), q), b);
    EXPECT_THROW(fq::divexact({1, 0, 1}, b, q), ComputeError);  // remainder 2
}
