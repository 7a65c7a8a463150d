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

#include "stern/power_sums.hpp"

namespace {

using namespace stern;
using exact::make_rational;
using exact::ratfunc_normalize;

RatPoly lin(long c) { return RatPoly({1, BigRational(-c)}); }

TEST(GkTest, ClosedForms) {
    GkTable table;
    EXPECT_EQ(gk_ratfunc(0, table), ratfunc_normalize(RatPoly({1}), lin(3)));
    EXPECT_EQ(gk_ratfunc(1, table), ratfunc_normalize(RatPoly({1}), lin(10)));
    EXPECT_EQ(gk_ratfunc(2, table), ratfunc_normalize(RatPoly({1, -1}), lin(3) * lin(36)));
    EXPECT_EQ(gk_ratfunc(3, table), ratfunc_normalize(RatPoly({1, 14}), lin(10) * lin(136)));
}

TEST(GkTest, TableIsMemoized) {
    GkTable table;
    const RationalFunction g5 = table.get(5);
    EXPECT_EQ(table.size(), 6u);
    EXPECT_EQ(table.get(5), g5);
    EXPECT_EQ(table.size(), 6u);
}

TEST(SkValueTest, Examples) {
    GkTable table;
    EXPECT_EQ(sk_value(1, 1, table), 10);
    EXPECT_EQ(sk_value(2, 1, table), 38);
    EXPECT_EQ(sk_value(0, 3, table), 27);
    EXPECT_EQ(sk_value(3, 2, table), 22000);
    for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(sk_value(k, 0, table), 1) << k;
}

TEST(SkBruteTest, Examples) {
    SternCache cache;
    EXPECT_EQ(sk_brute(3, 1, cache), 160);
    EXPECT_EQ(sk_brute(1, 0, cache), 1);
    EXPECT_EQ(sk_brute(2, 1, cache), 4 + 9 + 25);
    EXPECT_THROW(sk_brute(1, 9, cache), cap_exceeded);
}

TEST(SkBruteTest, MatchesSeriesCoefficients) {
    SternCache cache;
    GkTable table;
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(sk_value(k, n, table), sk_brute(k, n, cache)) << k << "," << n;
}

TEST(SkClosedTest, Examples) {
    EXPECT_EQ(sk_closed(1, 4), 10000);
    EXPECT_EQ(sk_closed(2, 0), 1);
    EXPECT_EQ(sk_closed(3, 2), 22000);
    EXPECT_EQ(sk_closed(3, 1), 160);
    EXPECT_THROW(sk_closed(4, 1), std::domain_error);
    EXPECT_THROW(sk_closed(0, 1), std::domain_error);
}

TEST(SkClosedTest, MatchesSeriesUpTo12) {
    GkTable table;
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(sk_value(k, n, table), sk_closed(k, n)) << k << "," << n;
}

TEST(ParityTest, HoldsUpTo10) {
    GkTable table;
    for (unsigned k = 0; k <= 10; ++k) EXPECT_TRUE(parity_structure_check(k, table)) << k;
    EXPECT_THROW(parity_structure_check(13, table), cap_exceeded);
}

TEST(ParityTest, DetectsWrongClass) {
    // G_2 has the pole 1/3, which is absent from the odd class.
    GkTable table;
    EXPECT_FALSE(exact::divides(table.get(2).denominator(), parity_pole_product(1)));
    EXPECT_EQ(pole_base(0), 3);
    EXPECT_EQ(pole_base(1), 10);
    EXPECT_EQ(pole_base(2), 36);
    EXPECT_EQ(pole_base(3), 136);
}

TEST(AlphaTest, Examples) {
    GkTable table;
    EXPECT_EQ(alpha_decomposition(2, table), (std::vector<AlphaTerm>{{36, make_rational(35, 33)}, {3, make_rational(-2, 33)}}));
    EXPECT_EQ(alpha_decomposition(3, table), (std::vector<AlphaTerm>{{136, make_rational(25, 21)}, {10, make_rational(-4, 21)}}));
    EXPECT_EQ(alpha_decomposition(1, table), (std::vector<AlphaTerm>{{10, 1}}));
    EXPECT_EQ(alpha_decomposition(0, table), (std::vector<AlphaTerm>{{3, 1}}));
}

TEST(AlphaProperty, PredictsSeriesCoefficients) {
    GkTable table;
    for (unsigned k = 0; k <= 8; ++k) {
        const auto terms = alpha_decomposition(k, table);
        BigRational total = 0;
        for (const auto& t : terms) total += t.alpha;
        EXPECT_EQ(total, 1) << k;  // S_k(0) = 1
        for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(alpha_predict(terms, n), BigRational(sk_value(k, n, table))) << k << "," << n;
    }
}

}  // namespace
