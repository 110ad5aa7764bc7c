#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "wilf/wieferich.hpp"

using namespace wilf;

namespace {

IntPolynomial from_longs(const std::vector<long>& v) {
    IntPolynomial p;
    for (long c : v) p.coeffs.emplace_back(c);
    return p;
}

bool naive_pair(uint64_t q, uint64_t p) {
    uint64_t p2 = p * p, x = 1;
    for (uint64_t i = 0; i < p - 1; ++i) x = x * (q % p2) % p2;
    return x == 1;
}

}  // namespace

TEST(WieferichPair, KnownExamples) {
    EXPECT_TRUE(is_wieferich_pair(3, 11));     // 3^5 = 243 == 1 (mod 121)
    EXPECT_TRUE(is_wieferich_pair(2, 1093));   // the classical pair
    EXPECT_FALSE(is_wieferich_pair(2, 3));     // 4 != 1 (mod 9)
    EXPECT_THROW(is_wieferich_pair(7, 7), InvalidParamsError);
    EXPECT_THROW(is_wieferich_pair(4, 7), InvalidParamsError);
}

TEST(WieferichPair, AgreesWithNaiveOracle) {
    for (uint64_t p = 3; p < 100; ++p) {
        if (!is_prime_u64(p)) continue;
        for (uint64_t q = 2; q < 100; ++q) {
            if (q == p || !is_prime_u64(q)) continue;
            EXPECT_EQ(is_wieferich_pair(q, p), naive_pair(q, p)) << "q=" << q << " p=" << p;
        }
    }
}

TEST(Scan, FindsTablePartners) {
    auto s11 = scan_wieferich(11, 100);
    EXPECT_NE(std::find(s11.begin(), s11.end(), 3u), s11.end());
    auto s13 = scan_wieferich(13, 100);
    EXPECT_NE(std::find(s13.begin(), s13.end(), 23u), s13.end());
    EXPECT_TRUE(scan_wieferich(5, 2).empty());  // 2^4 = 16 != 1 (mod 25)
}

TEST(Splitting, TableRowsSplit) {
    EXPECT_TRUE(splits_linearly_mod_q(L_exact(11), 3));
    EXPECT_TRUE(splits_linearly_mod_q(L_exact(13), 23));
}

TEST(Splitting, SyntheticCases) {
    EXPECT_FALSE(splits_linearly_mod_q(from_longs({1, 1, 1}), 2));  // irreducible over F_2
    EXPECT_TRUE(splits_linearly_mod_q(from_longs({-1, 0, 1}), 5));  // (x-1)(x+1)
    EXPECT_TRUE(splits_linearly_mod_q(from_longs({1, 2, 1}), 3));   // (x+1)^2, repeated root
    EXPECT_TRUE(splits_linearly_mod_q(from_longs({0, 0, 1}), 7));   // x^2
    EXPECT_FALSE(splits_linearly_mod_q(from_longs({1, 0, 0, 0, 1}), 3));  // x^4+1 over F_3
    EXPECT_THROW(splits_linearly_mod_q(from_longs({1, 2}), 5), InvalidParamsError);  // not monic
}

TEST(Valuation, TableRowsExact) {
    EXPECT_EQ(valuation_of_constant(11, 3), 5u);
    EXPECT_EQ(valuation_of_constant(13, 23), 3u);
    EXPECT_EQ(valuation_of_constant(5, 3), 0u);  // L(5,0) = 1
}

TEST(Valuation, FastPathMatchesFullPolynomial) {
    for (auto [p, q] : {std::pair<unsigned long, uint64_t>{11, 3}, {13, 23}, {43, 19}}) {
        mpz_class c = L_exact(p).coeffs[0];
        unsigned e = 0;
        mpz_class qz(static_cast<unsigned long>(q));
        while (mpz_divisible_p(c.get_mpz_t(), qz.get_mpz_t())) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), qz.get_mpz_t());
            ++e;
        }
        EXPECT_EQ(valuation_of_constant(p, q), e) << p;
    }
}

TEST(Control, NonPairsAreExploratoryOnly) {
    // Theorem 4 is one-directional: for non-pairs we may probe the
    // splitting but assert nothing about its outcome. Pairs found along the
    // way (e.g. 7^4 == 1 mod 25) must split.
    for (unsigned long p : {5ul, 7ul}) {
        IntPolynomial L = L_exact(p);
        for (uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            if (q == p) continue;
            if (is_wieferich_pair(q, p)) {
                EXPECT_TRUE(splits_linearly_mod_q(L, q)) << "q=" << q << " p=" << p;
            } else {
                EXPECT_NO_THROW(splits_linearly_mod_q(L, q));
            }
        }
    }
}

TEST(ReproduceTable, FirstTwoRows) {
    auto records = reproduce_table({11, 13});
    ASSERT_EQ(records.size(), 2u);
    for (const auto& rec : records) {
        EXPECT_TRUE(rec.found_by_scan) << rec.p;
        EXPECT_TRUE(rec.is_pair) << rec.p;
        ASSERT_TRUE(rec.splits.has_value()) << rec.p;
        EXPECT_TRUE(*rec.splits) << rec.p;
        EXPECT_TRUE(rec.matches_table()) << rec.p;
    }
    EXPECT_EQ(*records[0].valuation, 5u);
    EXPECT_EQ(*records[1].valuation, 3u);
}

TEST(ReproduceTable, RejectsUnknownRow) {
    EXPECT_THROW(reproduce_table({17}), InvalidParamsError);
}
