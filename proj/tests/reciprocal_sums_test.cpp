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

#include "stern/reciprocal_sums.hpp"

namespace {

using namespace stern;
using exact::make_rational;
using exact::RatPoly;

IntPoly pow_poly(const IntPoly& p, int k) {
    IntPoly r({1});
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

TEST(AuxPolyTest, KnownTable) {
    AuxSternFamily family;
    const IntPoly one({1}), t({0, 1}), one_t({1, 1}), one_t_t2({1, 1, 1});
    const std::vector<IntPoly> table = {
        IntPoly{}, IntPoly{}, one, IntPoly{},            // 1..4
        one_t, t, one_t, IntPoly{},                      // 5..8
        one_t_t2, t * one_t, pow_poly(one_t, 2), t * t,  // 9..12
        pow_poly(one_t, 2), t * one_t, one_t_t2, IntPoly{}};  // 13..16
    for (std::uint64_t k = 1; k <= 16; ++k) EXPECT_EQ(aux_poly(k, family), table[k - 1]) << k;
    EXPECT_THROW(aux_poly(0, family), std::domain_error);
}

TEST(AuxPolyProperty, EvenRuleAndDegreeBound) {
    AuxSternFamily family;
    SternCache cache;
    for (std::uint64_t k = 1; k <= 1024; ++k) {
        EXPECT_EQ(aux_poly(2 * k, family), aux_poly(k, family).shifted(1)) << k;
        for (const auto& c : aux_poly(k, family).coeffs()) EXPECT_GE(c, 0);
    }
    for (std::uint64_t k = 3; k <= 4096; ++k) ASSERT_LE(aux_poly(k, family).degree(), floor_log2(k) - 1) << k;
    // deg S_k can exceed deg B_k.
    EXPECT_EQ(aux_poly(19, family).degree(), 3);
    EXPECT_EQ(stern_poly(19, cache).degree(), 2);
}

TEST(LemmaTest, Examples) {
    SternCache cache;
    AuxSternFamily family;
    EXPECT_TRUE(lemma_identity_check(1, cache, family));
    EXPECT_TRUE(lemma_identity_check(2, cache, family));
    // At n = 2 both sides are (2 - t) t.
    const IntPoly side = IntPoly({2, -1}) * (stern_poly(2, cache) * aux_poly(3, family) - aux_poly(2, family) * stern_poly(3, cache));
    EXPECT_EQ(side, IntPoly({0, 2, -1}));
    EXPECT_THROW(lemma_identity_check(0, cache, family), std::domain_error);
}

TEST(LemmaTest, HoldsUpTo2048) {
    SternCache cache;
    AuxSternFamily family;
    for (std::uint64_t n = 1; n <= 2048; ++n) ASSERT_TRUE(lemma_identity_check(n, cache, family)) << n;
}

TEST(CorollaryTest, HoldsUpTo1024) {
    SternCache cache;
    AuxSternFamily family;
    for (std::uint64_t k = 1; k <= 1024; ++k) ASSERT_TRUE(corollary_identity_check(k, cache, family)) << k;
}

TEST(CorollaryTest, AsRationalFunctions) {
    // Same identity, divided out, for small k.
    SternCache cache;
    AuxSternFamily family;
    for (std::uint64_t k = 1; k <= 32; ++k) {
        const RationalFunction c = RationalFunction(IntPoly({2, -1})) /
                                   RationalFunction(IntPoly::monomial(1, static_cast<std::size_t>(floor_log2(k))));
        const RationalFunction bk(stern_poly(k, cache)), bk1(stern_poly(k + 1, cache)), b2k1(stern_poly(2 * k + 1, cache));
        const RationalFunction lhs = c * RationalFunction(aux_poly(2 * k + 1, family)) / b2k1;
        const RationalFunction rhs = c * RationalFunction(aux_poly(k, family)) / bk +
                                     (bk1 - RationalFunction(IntPoly({-1, 1})) * (bk + RationalFunction(1))) / (bk * b2k1);
        EXPECT_EQ(lhs, rhs) << k;
    }
}

// Term-by-term sum with polynomials from the plain recursion.
RationalFunction direct_block_sum(std::uint64_t k, unsigned n) {
    const std::uint64_t hi = k << (n + 1);
    std::vector<IntPoly> b = {IntPoly{}, IntPoly({1})};
    for (std::uint64_t i = 2; i <= hi + 1; ++i) b.push_back(i % 2 == 0 ? b[i / 2].shifted(1) : b[i / 2] + b[i / 2 + 1]);
    RationalFunction sum;
    for (std::uint64_t i = k << n; i <= hi; ++i) sum += RationalFunction(1) / RationalFunction(b[i] * b[i + 1]);
    return sum;
}

TEST(ReciprocalSumTest, Examples) {
    SternCache cache;
    ReciprocalPrefix prefix;
    AuxSternFamily family;
    const RationalFunction p10 = exact::ratfunc_normalize(RatPoly({2, 1}), RatPoly({0, 1, 1}));
    EXPECT_EQ(reciprocal_sum_lhs(1, 0, cache, prefix), p10);
    EXPECT_EQ(reciprocal_sum_rhs(1, 0, cache, family), p10);
    EXPECT_EQ(reciprocal_sum_lhs(1, 1, cache, prefix), reciprocal_sum_rhs(1, 1, cache, family));
    EXPECT_EQ(reciprocal_sum_lhs(3, 0, cache, prefix), reciprocal_sum_rhs(3, 0, cache, family));
    EXPECT_EQ(reciprocal_sum_lhs(2, 0, cache, prefix), reciprocal_sum_rhs(2, 0, cache, family));
    EXPECT_EQ(reciprocal_sum_lhs(5, 2, cache, prefix), reciprocal_sum_rhs(5, 2, cache, family));
    EXPECT_THROW(reciprocal_sum_lhs(1, 14, cache, prefix), cap_exceeded);
    EXPECT_THROW(reciprocal_sum_rhs(1, 14, cache, family), cap_exceeded);
    EXPECT_THROW(reciprocal_sum_lhs(0, 1, cache, prefix), std::domain_error);
}

TEST(ReciprocalSumTest, PrefixMatchesDirectSum) {
    SternCache cache;
    ReciprocalPrefix prefix;
    for (std::uint64_t k = 1; k <= 12; ++k)
        for (unsigned n = 0; (k << (n + 1)) <= 256; ++n) EXPECT_EQ(reciprocal_sum_lhs(k, n, cache, prefix), direct_block_sum(k, n)) << k << "," << n;
}

TEST(ReciprocalTheoremTest, ExactUpTo2Pow12) {
    SternCache cache;
    ReciprocalPrefix prefix;
    AuxSternFamily family;
    for (unsigned n = 0; n <= 11; ++n)
        for (std::uint64_t k = 1; (k << (n + 1)) <= 4096; ++k) ASSERT_TRUE(reciprocal_theorem_check(k, n, cache, prefix, family)) << k << "," << n;
}

TEST(ReciprocalTheoremTest, PointwiseFallback) {
    SternCache cache;
    ReciprocalPrefix prefix;
    AuxSternFamily family;
    ReciprocalTheoremCaps caps;
    caps.exact = 64;
    EXPECT_TRUE(reciprocal_theorem_check(3, 5, cache, prefix, family, caps));
    EXPECT_TRUE(reciprocal_theorem_check(1, 9, cache, prefix, family, caps));
    EXPECT_TRUE(reciprocal_theorem_check(4097, 1, cache, prefix, family, caps));
    // The pointwise values agree with the exact sum where both apply.
    const RationalFunction lhs = reciprocal_sum_lhs(5, 3, cache, prefix);
    for (long v = 1; v <= 4; ++v) EXPECT_EQ(reciprocal_sum_lhs_at(5, 3, make_rational(v, 3)), lhs.evaluate(make_rational(v, 3)));
}

TEST(ReciprocalTheoremTest, SpecializesToSternNumbers) {
    SternCache cache;
    ReciprocalPrefix prefix;
    std::vector<long> s = {0, 1};
    for (std::size_t i = 2; i <= 600; ++i) s.push_back(i % 2 == 0 ? s[i / 2] : s[i / 2] + s[i / 2 + 1]);
    for (std::uint64_t k = 1; k <= 20; ++k)
        for (unsigned n = 0; (k << (n + 1)) <= 512; ++n) {
            BigRational direct = 0;
            for (std::uint64_t i = k << n; i <= (k << (n + 1)); ++i) direct += make_rational(1, s[i] * s[i + 1]);
            EXPECT_EQ(reciprocal_sum_lhs(k, n, cache, prefix).evaluate(1), direct) << k << "," << n;
        }
}

TEST(UrbihaTest, Examples) {
    SternCache cache;
    EXPECT_EQ(urbiha_sum(1, cache), 1);
    EXPECT_EQ(urbiha_sum(3, cache), 1);
    EXPECT_EQ(make_rational(1, 2) + make_rational(1, 3) + make_rational(1, 6), 1);
    EXPECT_THROW(urbiha_sum(0, cache), std::domain_error);
    EXPECT_THROW(urbiha_sum(std::uint64_t{1} << 22, cache), cap_exceeded);
}

TEST(UrbihaTest, EqualsOneUpTo4096) {
    SternCache cache;
    for (std::uint64_t m = 1; m <= 4096; ++m) ASSERT_EQ(urbiha_sum(m, cache), 1) << m;
}

TEST(PQRecurrenceTest, HoldsUpTo256) {
    SternCache cache;
    ReciprocalPrefix prefix;
    AuxSternFamily family;
    EXPECT_TRUE(p_q_recurrence_checks(1, cache, prefix, family));
    EXPECT_TRUE(p_q_recurrence_checks(2, cache, prefix, family));
    for (std::uint64_t k = 1; k <= 256; ++k) ASSERT_TRUE(p_q_recurrence_checks(k, cache, prefix, family)) << k;
}

}  // namespace
