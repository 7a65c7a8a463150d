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

#include "generators.hpp"
#include "stern/exact.hpp"

namespace {

using namespace stern::exact;
using stern::testing::Gen;

RatPoly rp(std::initializer_list<BigRational> cs) { return RatPoly(cs); }
BigRational q(long n, long d = 1) { return make_rational(n, d); }

TEST(BigRationalTest, CanonicalForm) {
    const BigRational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(make_rational(0, 7).get_den(), 1);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(BigRationalTest, RationalSqrt) {
    EXPECT_EQ(*rational_sqrt(q(9, 4)), q(3, 2));
    EXPECT_EQ(*rational_sqrt(q(1)), q(1));
    EXPECT_FALSE(rational_sqrt(q(2)).has_value());
    EXPECT_FALSE(rational_sqrt(q(-4)).has_value());
}

TEST(PolyTest, NormalizationAndDegree) {
    EXPECT_EQ(IntPoly({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(IntPoly({0, 0}).is_zero());
    EXPECT_EQ(IntPoly{}.degree(), -1);
    EXPECT_EQ(IntPoly({0, 0, 3}).valuation(), 2);
    EXPECT_EQ(to_string(IntPoly({1, 1, 1})), "1 + t + t^2");
    EXPECT_EQ(to_string(IntPoly({0, -2, 0, 1}), "x"), "-2x + x^3");
}

TEST(PolyTest, GcdOverRationals) {
    const IntPoly a = IntPoly({-1, 0, 1});  // x^2 - 1
    const IntPoly b = IntPoly({-2, 2});     // 2x - 2
    EXPECT_EQ(gcd(a, b), IntPoly({-1, 1}));
    EXPECT_EQ(gcd(IntPoly({1, 1}), IntPoly({1, 2})), IntPoly({1}));
    EXPECT_EQ(gcd(IntPoly{}, IntPoly({0, 4})), IntPoly({0, 1}));
}

TEST(PolyTest, DivmodReconstructs) {
    Gen g(7);
    for (int trial = 0; trial < 200; ++trial) {
        const RatPoly a = g.rat_poly(6);
        const RatPoly b = g.nonzero_rat_poly(3);
        auto [quo, rem] = divmod(a, b);
        EXPECT_EQ(quo * b + rem, a);
        EXPECT_LT(rem.degree(), b.degree());
    }
}

TEST(PolyProperty, RingAxioms) {
    Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly a = g.int_poly(), b = g.int_poly(), c = g.int_poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        const RatPoly x = g.rat_poly(), y = g.rat_poly(), z = g.rat_poly();
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ((x + y) * z, x * z + y * z);
    }
}

TEST(RatFuncTest, NormalizeExamples) {
    // (x^2 - 1)/(x - 1) -> (x + 1)/1
    RationalFunction f = ratfunc_normalize(rp({-1, 0, 1}), rp({-1, 1}));
    EXPECT_EQ(f.numerator(), rp({1, 1}));
    EXPECT_EQ(f.denominator(), rp({1}));

    // 1/(1 - 3x) -> (-1/3)/(x - 1/3)
    f = ratfunc_normalize(rp({1}), rp({1, -3}));
    EXPECT_EQ(f.numerator(), rp({q(-1, 3)}));
    EXPECT_EQ(f.denominator(), rp({q(-1, 3), 1}));

    f = ratfunc_normalize(RatPoly{}, rp({0, 1}));
    EXPECT_TRUE(f.numerator().is_zero());
    EXPECT_EQ(f.denominator(), rp({1}));

    EXPECT_THROW(ratfunc_normalize(rp({1}), RatPoly{}), std::domain_error);
}

TEST(RatFuncProperty, EqualityIsCrossMultiplication) {
    Gen g(13);
    for (int trial = 0; trial < 200; ++trial) {
        const RatPoly a = g.rat_poly(), b = g.nonzero_rat_poly(), k = g.nonzero_rat_poly(2);
        const RationalFunction f = ratfunc_normalize(a, b);
        const RationalFunction h = ratfunc_normalize(a * k, b * k);
        EXPECT_EQ(f, h);
        EXPECT_EQ(ratfunc_normalize(f.numerator(), f.denominator()), f);
        EXPECT_EQ(f.numerator() * b, a * f.denominator());
        if (f.denominator().degree() > 0 && !f.is_zero()) {
            EXPECT_LE(gcd(primitive_part(f.numerator()), primitive_part(f.denominator())).degree(), 0);
        }
    }
}

TEST(RatFuncProperty, FieldOperations) {
    Gen g(17);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalFunction a = ratfunc_normalize(g.rat_poly(), g.nonzero_rat_poly());
        const RationalFunction b = ratfunc_normalize(g.rat_poly(), g.nonzero_rat_poly());
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ(a * b / b, a);
        }
        EXPECT_EQ(a * (a + b), a * a + a * b);
    }
}

TEST(SeriesTest, ExpandExamples) {
    const auto g0 = series_expand(ratfunc_normalize(rp({1}), rp({1, -3})), 4);
    EXPECT_EQ(g0.coeffs(), (std::vector<BigRational>{1, 3, 9, 27}));
    const auto g1 = series_expand(ratfunc_normalize(rp({1}), rp({1, -10})), 3);
    EXPECT_EQ(g1.coeffs(), (std::vector<BigRational>{1, 10, 100}));
    // (t + 2)/(t (t + 1)) has a pole at the origin
    EXPECT_THROW(series_expand(ratfunc_normalize(rp({2, 1}), rp({0, 1, 1})), 4), std::domain_error);
}

TEST(SeriesTest, SubstitutePowerExamples) {
    const TruncatedSeries f = TruncatedSeries::from_poly(rp({0, 1, 0, 1}), 8);
    EXPECT_EQ(series_substitute_power(f, 2), TruncatedSeries::from_poly(rp({0, 0, 1, 0, 0, 0, 1}), 8));
    EXPECT_EQ(series_substitute_power(f, 1), f);
    const TruncatedSeries h = TruncatedSeries::from_poly(rp({1, 1}), 6);
    EXPECT_EQ(series_substitute_power(h, 4), TruncatedSeries::from_poly(rp({1, 0, 0, 0, 1}), 6));
    EXPECT_EQ(series_substitute_power(h, 4).order(), 6u);
}

TEST(SeriesTest, DivisionTracksValuation) {
    // x^2/(x + x^2) = 1/(1 + x) = 1 - x + x^2 - ...
    const TruncatedSeries a = TruncatedSeries::from_poly(rp({0, 0, 1}), 6);
    const TruncatedSeries b = TruncatedSeries::from_poly(rp({0, 1, 1}), 6);
    const TruncatedSeries c = a / b;
    EXPECT_EQ(c.order(), 5u);
    EXPECT_EQ(c.coeffs(), (std::vector<BigRational>{0, 1, -1, 1, -1}));  // x/(1+x)
    EXPECT_THROW(b / a, std::domain_error);
    EXPECT_EQ(b.divided_by_x().order(), 5u);
}

TEST(SeriesProperty, ExpandIsMultiplicative) {
    Gen g(19);
    for (int trial = 0; trial < 60; ++trial) {
        const RationalFunction f = g.expandable_ratfunc(), h = g.expandable_ratfunc();
        const std::size_t n = 12;
        EXPECT_EQ(series_expand(f * h, n), series_expand(f, n) * series_expand(h, n));
        EXPECT_EQ(series_expand(f + h, n), series_expand(f, n) + series_expand(h, n));
    }
}

TEST(SeriesF2Property, FrobeniusIsSubstitution) {
    Gen g(23);
    for (int trial = 0; trial < 200; ++trial) {
        SeriesF2 f(static_cast<std::size_t>(g.integer(1, 80)));
        for (std::size_t i = 0; i < f.order(); ++i) f.set(i, g.integer(0, 1) == 1);
        EXPECT_EQ(f.square(), f.substitute_power(2));
        EXPECT_EQ(f.square().square(), f.substitute_power(4));
        EXPECT_TRUE((f + f).is_zero());
    }
}

TEST(SeriesF2Test, ReduceModTwo) {
    const TruncatedSeries s(std::vector<BigRational>{0, 1, 2, 3, -5});
    EXPECT_EQ(SeriesF2::reduce(s).str(), "01011");
    EXPECT_THROW(SeriesF2::reduce(TruncatedSeries(std::vector<BigRational>{q(1, 2)})), std::domain_error);
}

TEST(DeterminantTest, Examples) {
    RationalMatrix id(3, std::vector<RationalFunction>(3));
    for (int i = 0; i < 3; ++i) id[i][i] = 1;
    EXPECT_EQ(ratfunc_matrix_determinant(id), RationalFunction(1));

    const RationalFunction a(rp({1, 2})), b(rp({0, 1})), c(rp({3})), d(ratfunc_normalize(rp({1}), rp({1, 1})));
    RationalMatrix m2 = {{a, b}, {c, d}};
    EXPECT_EQ(ratfunc_matrix_determinant(m2), a * d - b * c);

    RationalMatrix tri = {{1, a, b}, {0, 1, d}, {0, 0, 1}};
    EXPECT_EQ(ratfunc_matrix_determinant(tri), RationalFunction(1));

    RationalMatrix sing = {{a, b}, {a, b}};
    EXPECT_TRUE(ratfunc_matrix_determinant(sing).is_zero());
}

TEST(GaussianTest, PolyEvalExamples) {
    const GaussianRational i = GaussianRational::i();
    EXPECT_EQ(gaussian_poly_eval(IntPoly({0, 0, 1}), i), GaussianRational(-1));
    const GaussianRational z(0, q(-1, 4));
    EXPECT_EQ(gaussian_poly_eval(IntPoly({0, 2}), z), GaussianRational(0, q(-1, 2)));
    EXPECT_EQ(gaussian_poly_eval(IntPoly({-1, 0, 2}), z), GaussianRational(q(-9, 8)));
}

TEST(GaussianProperty, NormIsReal) {
    Gen g(29);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational z = g.gaussian(), w = g.gaussian();
        EXPECT_TRUE((z * z.conjugate()).is_real());
        EXPECT_EQ(z * w, w * z);
        if (!(w == GaussianRational(0))) {
            EXPECT_EQ(z * w / w, z);
        }
    }
}

TEST(LaurentTest, NormalizesShift) {
    const LaurentPoly p(IntPoly({0, 0, 2, 1}), -3);
    EXPECT_EQ(p.shift(), -1);
    EXPECT_EQ(p.base(), IntPoly({2, 1}));
    EXPECT_EQ(p.times_power(1), IntPoly({2, 1}));
    EXPECT_THROW(p.times_power(0), std::domain_error);
    const RationalFunction f(p);
    EXPECT_EQ(f, ratfunc_normalize(rp({2, 1}), rp({0, 1})));
}

}  // namespace
