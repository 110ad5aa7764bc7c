#include <gtest/gtest.h>

#include <vector>

#include "wilf/granville.hpp"

using namespace wilf;

TEST(BuildGranville, FirstRowExponentsForP7) {
    SymMatrix A = build_granville(7);
    // first row: omega^30, omega^31, omega^18, omega^19, omega^48, -x, omega
    const uint32_t exps[] = {30, 31, 18, 19, 48, 0, 1};
    for (unsigned long n = 1; n <= 7; ++n) {
        const SymEntry& e = A.at(1, n);
        if (n == 6) {
            EXPECT_EQ(e.kind, SymEntry::Kind::Variable);
        } else {
            ASSERT_EQ(e.kind, SymEntry::Kind::Exponent) << n;
            EXPECT_EQ(e.exp, exps[n - 1]) << n;
        }
    }
    EXPECT_EQ(A.at(1, 1).exp, 30u);  // 2^7 = 128 == 30 (mod 49)
}

TEST(BuildGranville, SymmetricAndSlotPlacement) {
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        SymMatrix A = build_granville(p);
        for (unsigned long m = 1; m <= p; ++m)
            for (unsigned long n = 1; n <= p; ++n) {
                EXPECT_TRUE(A.at(m, n) == A.at(n, m));
                EXPECT_EQ(A.at(m, n).kind == SymEntry::Kind::Variable, (m + n) % p == 0);
            }
    }
    EXPECT_THROW(build_granville(3), InvalidParamsError);
}

TEST(BuildF, InvolutionAndDeterminantSign) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        for (unsigned long j = 1; j <= p; ++j) EXPECT_EQ(f_perm(f_perm(j, p), p), j);
        int expected = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(det_f_sign(p), expected) << p;
    }
    EXPECT_EQ(det_f_sign(7), -1);
}

TEST(BuildFT, MatrixShapes) {
    SymMatrix F = build_F(5), T = build_T(5);
    for (unsigned long i = 1; i <= 5; ++i)
        for (unsigned long j = 1; j <= 5; ++j) {
            EXPECT_EQ(F.at(i, j).kind == SymEntry::Kind::One, j == f_perm(i, 5));
            EXPECT_EQ(T.at(i, j).kind == SymEntry::Kind::One, i == j % 5 + 1);
        }
}

TEST(BShiftDecomposition, Holds) {
    for (unsigned long p : {5ul, 7ul, 11ul}) EXPECT_TRUE(verify_b_shift_decomposition(p)) << p;
}

TEST(CIdentity, HoldsSymbolically) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) EXPECT_TRUE(verify_c_eq_minus_fa(p)) << p;
}

TEST(EigenCheck, SpotExamples) {
    CrtPrime cp5 = find_crt_primes(5, 4, 64)[0];
    ASSERT_EQ(cp5.q, 101u);
    EXPECT_TRUE(eigen_check_mod_q(5, 0, cp5));

    CrtPrime cp7 = find_crt_primes(7, 4, 100)[0];
    ASSERT_EQ(cp7.q, 197u);
    EXPECT_TRUE(eigen_check_mod_q(7, 3, cp7));
}

TEST(EigenCheck, AllKThreePrimes) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        auto primes = find_crt_primes(p, 70);
        ASSERT_GE(primes.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i)
            for (unsigned long k = 0; k < p; ++k)
                EXPECT_TRUE(eigen_check_mod_q(p, k, primes[i])) << "p=" << p << " k=" << k;
    }
}

TEST(DetGranville, MatchesSignedLExact) {
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul}) {
        IntPolynomial L = L_exact(p);
        auto used = find_crt_primes(p, mpz_sizeinbase(coefficient_bound(p).get_mpz_t(), 2));
        std::vector<uint64_t> used_qs;
        for (const auto& cp : used) used_qs.push_back(cp.q);
        // three fresh primes, disjoint from the reconstruction set
        std::vector<CrtPrime> fresh;
        for (int i = 0; i < 3; ++i) {
            fresh.push_back(fresh_crt_prime(p, used_qs));
            used_qs.push_back(fresh.back().q);
        }
        bool negate = ((p + 1) / 2) % 2 == 1;
        for (const CrtPrime& cp : fresh) {
            fq::Poly det = det_granville_mod_q(p, cp);
            fq::Poly lred = L.mod(cp.q);
            if (negate) lred = fq::scale(std::move(lred), cp.q - 1, cp.q);
            EXPECT_EQ(det, lred) << "p=" << p << " q=" << cp.q;
        }
    }
}

TEST(DetGranville, ConstantTermEvaluation) {
    unsigned long p = 7;
    CrtPrime cp = find_crt_primes(7, 4, 100)[0];
    fq::Poly det = det_granville_mod_q(p, cp);
    // det(A)(0) = (-1)^{(p+1)/2} L(p,0) = -97 mod 197 for p=7 (sign +1)
    EXPECT_EQ(fq::eval(det, 0, cp.q), cp.q - 97);
}

TEST(DetNumeric, MatchesSignedLAtSpotPoints) {
    PrecisionConfig cfg;
    for (unsigned long p : {5ul, 7ul}) {
        IntPolynomial L = L_exact(p);
        long sign = ((p + 1) / 2) % 2 == 1 ? -1 : 1;
        for (long x0 : {0L, 1L, -2L}) {
            Cplx det = det_numeric(p, Cplx(BigFloat::from_long(x0, cfg.bits), BigFloat(cfg.bits)),
                                   cfg);
            mpz_class expected = sign * L.eval(mpz_class(x0));
            BigFloat diff = det.re - BigFloat::from_mpz(expected, cfg.bits);
            EXPECT_LT(diff.abs().cmp(1e-6), 0) << "p=" << p << " x0=" << x0;
            EXPECT_LT(det.im.abs_to_double_up(), 1e-6);
        }
    }
}

TEST(DetNumeric, SpotValuesP7) {
    PrecisionConfig cfg;
    Cplx at0 = det_numeric(7, Cplx(cfg.bits), cfg);
    EXPECT_NEAR(at0.re.to_double(), -97.0, 1e-6);
    Cplx at1 = det_numeric(7, Cplx(BigFloat::from_long(1, cfg.bits), BigFloat(cfg.bits)), cfg);
    EXPECT_NEAR(at1.re.to_double(), -19.0, 1e-6);  // 1-21-21+91+112-84-97
}

TEST(DetNumeric, RefusesLargeP) {
    PrecisionConfig cfg;
    EXPECT_THROW(det_numeric(13, Cplx(cfg.bits), cfg), UnsupportedScaleError);
}
