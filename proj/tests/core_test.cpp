/*
   Copyright 2026 The sternpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "stern/core.hpp"

namespace {

using namespace stern;
using exact::RatPoly;

// Unmemoized recursion straight from the definition; exponential, small n only.
IntPoly naive_stern_poly(std::uint64_t n) {
    if (n == 0) return {};
    if (n == 1) return IntPoly({1});
    if (n % 2 == 0) return naive_stern_poly(n / 2).shifted(1);
    return naive_stern_poly((n - 1) / 2) + naive_stern_poly((n + 1) / 2);
}

TEST(SternPolyTest, Examples) {
    SternCache cache;
    EXPECT_TRUE(stern_poly(0, cache).is_zero());
    EXPECT_EQ(stern_poly(1, cache), IntPoly({1}));
    EXPECT_EQ(stern_poly(5, cache), IntPoly({1, 2}));
    EXPECT_EQ(stern_poly(7, cache), IntPoly({1, 1, 1}));
    EXPECT_EQ(stern_poly(12, cache), IntPoly({0, 0, 1, 1}));
}

TEST(SternPolyTest, MatchesNaiveRecursion) {
    SternCache cache;
    for (std::uint64_t n = 0; n <= 300; ++n) EXPECT_EQ(stern_poly(n, cache), naive_stern_poly(n)) << n;
}

TEST(SternPolyTest, SparseBeyondDenseTable) {
    SternCache dense, sparse;
    const std::uint64_t n = SternCache::kDensePolyLimit + 12345;
    // Fill the dense table only for the second cache via a low index.
    const IntPoly a = sparse.poly(n);
    for (std::uint64_t m = n - 3; m <= n + 3; ++m) EXPECT_EQ(dense.poly(m).evaluate<BigInt>(1), dense.number(m));
    EXPECT_EQ(a.evaluate<BigInt>(1), sparse.number(n));
    EXPECT_EQ(static_cast<long>(sparse.degree(n)), a.degree());
}

TEST(SternNumberTest, Examples) {
    SternCache cache;
    EXPECT_EQ(stern_number(0, cache), 0);
    EXPECT_EQ(stern_number(1, cache), 1);
    EXPECT_EQ(stern_number(6, cache), 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, 10000)(rng);
        EXPECT_EQ(stern_number(2 * k, cache), stern_number(k, cache));
    }
    // Beyond the dense table the top-down algorithm is used.
    const std::uint64_t big = (std::uint64_t{1} << 40) + 77;
    EXPECT_EQ(stern_number(2 * big, cache), stern_number(big, cache));
    EXPECT_EQ(stern_number(2 * big + 1, cache), stern_number(big, cache) + stern_number(big + 1, cache));
}

TEST(DegreeTest, Examples) {
    SternCache cache;
    EXPECT_EQ(degree_e(1, cache), 0);
    EXPECT_EQ(degree_e(2, cache), 1);
    EXPECT_EQ(degree_e(5, cache), 1);
    for (unsigned m = 1; m <= 12; ++m) EXPECT_EQ(degree_e((std::uint64_t{1} << (m + 1)) + 1, cache), static_cast<int>(m));
    EXPECT_THROW(degree_e(0, cache), std::domain_error);
    // Far beyond the dense table.
    EXPECT_EQ(degree_e((std::uint64_t{1} << 41) + 1, cache), 40);
}

TEST(OrderTest, Examples) {
    SternCache cache;
    EXPECT_EQ(order_d(12, cache), 2);
    for (std::uint64_t n = 1; n < 200; n += 2) EXPECT_EQ(order_d(n, cache), 0);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(order_d(std::uint64_t{1} << k, cache), k);
    EXPECT_THROW(order_d(0, cache), std::domain_error);
}

TEST(NuTest, Examples) {
    EXPECT_EQ(nu(40), 3);
    EXPECT_EQ(nu(1), 0);
    EXPECT_EQ(nu(999), 0);
    for (std::uint64_t n = 1; n < 1000; ++n) EXPECT_EQ(nu(2 * n), nu(n) + 1);
    EXPECT_THROW(nu(0), std::domain_error);
}

TEST(SternCoreProperty, DegreeOrderAndValueUpTo2Pow14) {
    SternCache cache;
    for (std::uint64_t n = 1; n <= (1u << 14); ++n) {
        const IntPoly& b = stern_poly(n, cache);
        ASSERT_EQ(degree_e(n, cache), b.degree()) << n;
        ASSERT_EQ(order_d(n, cache), nu(n)) << n;
        ASSERT_EQ(order_d(n, cache), std::countr_zero(n)) << n;
        ASSERT_LE(order_d(n, cache), degree_e(n, cache)) << n;
        ASSERT_EQ(stern_number(n, cache), b.evaluate<BigInt>(1)) << n;
        ASSERT_GT(stern_number(n, cache), 0);
        for (const auto& c : b.coeffs()) ASSERT_GE(c, 0);
    }
}

TEST(SternCoreProperty, Identities) {
    SternCache cache;
    for (std::uint64_t n = 1; n <= (1u << 14); ++n) ASSERT_TRUE(valuation_identity_check(n, cache)) << n;
    const IntPoly one_plus_t({1, 1});
    for (std::uint64_t k = 0; k <= (1u << 12); ++k)
        ASSERT_EQ(stern_poly(4 * k + 3, cache), stern_poly(k, cache) + one_plus_t * stern_poly(k + 1, cache)) << k;
}

TEST(ClosedFormTest, PowersOfTwo) {
    SternCache cache;
    EXPECT_EQ(closed_form_pow2(3, -1), IntPoly({1, 1, 1}));
    EXPECT_EQ(closed_form_pow2(1, 1), IntPoly({1, 1}));
    EXPECT_EQ(closed_form_pow2(2, 1), IntPoly({1, 2}));
    EXPECT_EQ(closed_form_pow2(2, 1), stern_poly(5, cache));
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(closed_form_pow2(n, -1), stern_poly((1u << n) - 1, cache));
        EXPECT_EQ(closed_form_pow2(n, 1), stern_poly((1u << n) + 1, cache));
    }
    EXPECT_THROW(closed_form_pow2(0, 1), std::domain_error);
}

TEST(ACoefficientTest, Examples) {
    EXPECT_EQ(a_coefficient(7), LaurentPoly(IntPoly({0, 1})));
    EXPECT_EQ(a_coefficient(2), LaurentPoly(IntPoly({2, 1}), -1));
    // (2 + 3t)/t^2: the only value with B_5 = A_4 B_4 - B_3.
    EXPECT_EQ(a_coefficient(4), LaurentPoly(IntPoly({2, 3}), -2));
    SternCache cache;
    const RationalFunction a4(a_coefficient(4));
    EXPECT_EQ(a4 * RationalFunction(stern_poly(4, cache)) - RationalFunction(stern_poly(3, cache)),
              RationalFunction(stern_poly(5, cache)));
    // B_3 = A_2 B_2 - B_1
    EXPECT_EQ(RationalFunction(a_coefficient(2)) * RationalFunction(stern_poly(2, cache)) - RationalFunction(1),
              RationalFunction(stern_poly(3, cache)));
}

TEST(ThreeTermTest, HoldsUpTo2048) {
    SternCache cache;
    EXPECT_TRUE(three_term_check(1, cache));
    EXPECT_TRUE(three_term_check(2, cache));
    for (std::uint64_t n = 1; n <= 2048; ++n) ASSERT_TRUE(three_term_check(n, cache)) << n;
    EXPECT_THROW(three_term_check(0, cache), std::domain_error);
}

TEST(DeterminantTest, SystemMatrixIsUnimodular) {
    for (std::uint64_t n = 2; n <= 10; ++n)
        EXPECT_EQ(exact::ratfunc_matrix_determinant(stern_system_matrix(n)), RationalFunction(1));
}

TEST(DeterminantTest, Examples) {
    EXPECT_EQ(stern_poly_determinant(3), RationalFunction(IntPoly({1, 1})));
    EXPECT_EQ(stern_poly_determinant(4), RationalFunction(IntPoly({0, 0, 1})));
    EXPECT_EQ(stern_poly_determinant(8), RationalFunction(IntPoly({0, 0, 0, 1})));
    EXPECT_THROW(stern_poly_determinant(1), std::domain_error);
}

TEST(DeterminantTest, MatchesSternPolyUpTo16) {
    SternCache cache;
    for (std::uint64_t n = 2; n <= 16; ++n)
        EXPECT_EQ(stern_poly_determinant(n), RationalFunction(stern_poly(n, cache))) << n;
}

TEST(PhiPreimageTest, Examples) {
    SternCache cache;
    EXPECT_EQ(phi_preimage(3, 3), 8u);
    EXPECT_EQ(phi_preimage(0, 2), 9u);
    EXPECT_EQ(phi_preimage(1, 3), 18u);
    EXPECT_THROW(phi_preimage(3, 2), std::domain_error);
    for (unsigned q = 0; q <= 20; ++q)
        for (unsigned p = 0; p <= q; ++p) {
            const std::uint64_t n = phi_preimage(p, q);
            EXPECT_EQ(nu(n), static_cast<int>(p));
            EXPECT_EQ(degree_e(n, cache), static_cast<int>(q));
        }
}

}  // namespace
