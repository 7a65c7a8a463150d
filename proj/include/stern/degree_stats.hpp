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

#pragma once

// Counting m in [1, 2^n] by the degree e(m) and by e(m) - d(m).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stern/core.hpp"
#include "stern/errors.hpp"

namespace stern {

using exact::GaussianRational;
using exact::RatPoly;

/// Brute-force bounds (exponents of 2 unless noted).
struct DegreeStatsCaps {
    unsigned histogram_n = 20;    // h_poly_brute, c_count, stats_extrema
    unsigned degree_range_n = 10; // stats_degree_range searches [1, 2^(2n+1)]
};

/// counts[i] = e(i, n) = #{m in [1, 2^n] : e(m) = i}.
struct DegreeHistogram {
    unsigned n = 0;
    std::vector<BigInt> counts;
};

/// H_n(x) from H_0 = 1, H_1 = 1 + x, H_{m+2} = x H_{m+1} + 2x H_m - x^{m+1} + 1.
inline IntPoly h_poly(unsigned n) {
    IntPoly prev({1});
    if (n == 0) return prev;
    IntPoly cur({1, 1});
    const IntPoly one({1});
    for (unsigned m = 0; m + 2 <= n; ++m) {
        IntPoly next = cur.shifted(1) + prev.shifted(1) * BigInt(2) - IntPoly::monomial(1, m + 1) + one;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Histogram of e over [1, 2^n] by direct enumeration.
inline DegreeHistogram degree_histogram(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    require_cap("degree histogram exponent", n, caps.histogram_n);
    const std::uint64_t top = std::uint64_t{1} << n;
    const auto& e = cache.degrees_up_to(top);
    DegreeHistogram h{n, std::vector<BigInt>(n + 1, BigInt(0))};
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t m = 1; m <= top; ++m) {
        const auto d = static_cast<std::size_t>(e[m]);
        if (d > n) throw formula_discrepancy("e(m) exceeds n on [1, 2^n]");
        ++counts[d];
    }
    for (std::size_t i = 0; i <= n; ++i) h.counts[i] = BigInt(static_cast<unsigned long>(counts[i]));
    return h;
}

/// H_n(x) = sum_{m=1}^{2^n} x^{e(m)}, summed directly.
inline IntPoly h_poly_brute(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    return IntPoly(degree_histogram(n, cache, caps).counts);
}

/// H_{n+1}(x) - x H_n(x): the coefficient of x^i counts m in [0, 2^n - 1] with e(2m+1) = i.
inline IntPoly odd_degree_poly(unsigned n) { return h_poly(n + 1) - h_poly(n).shifted(1); }

/// Direct count of m in [0, 2^n - 1] with e(2m+1) = i, as a polynomial.
inline IntPoly odd_degree_poly_brute(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    require_cap("odd degree histogram exponent", n + 1, caps.histogram_n);
    std::vector<BigInt> counts(n + 2, BigInt(0));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) counts[static_cast<std::size_t>(cache.degree(2 * m + 1))] += 1;
    return IntPoly(std::move(counts));
}

/// e(i, n) from the three-range closed formula. The middle range is evaluated
/// in exact rationals; a non-integral result raises formula_discrepancy.
inline BigInt e_count_closed(long i, long n) {
    if (n < 0 || i < 0 || i > n) return 0;
    if (i == n) return 1;
    const long lower = n - n / 2;
    if (i <= lower - 1) return exact::pow(BigInt(3), static_cast<unsigned long>(i));
    BigRational sum = 0;
    for (long j = lower; j <= i; ++j) {
        sum += BigRational((2 * n - 5 * j) * exact::binomial(j, n - j)) /
               BigRational(j * exact::pow(BigInt(6), static_cast<unsigned long>(j)));
    }
    const BigInt two_n = exact::pow2(static_cast<unsigned long>(n));
    BigRational value = BigRational(two_n * exact::binomial(i, n - i)) / BigRational(exact::pow2(static_cast<unsigned long>(i + 1)));
    value += BigRational(exact::pow(BigInt(3), static_cast<unsigned long>(i))) * (1 + BigRational(two_n) * sum);
    value.canonicalize();
    if (!exact::is_integer(value))
        throw formula_discrepancy("e(" + std::to_string(i) + "," + std::to_string(n) + ") closed form is " + value.get_str());
    return value.get_num();
}

/// #{m in [1, 2^n] : e(m) - d(m) = i}, counted directly. d comes from its own
/// recurrence, not from d = nu.
inline BigInt c_count(long i, unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    require_cap("c_count exponent", n, caps.histogram_n);
    const std::uint64_t top = std::uint64_t{1} << n;
    const auto& e = cache.degrees_up_to(top);
    const auto& d = cache.orders_up_to(top);
    unsigned long count = 0;
    for (std::uint64_t m = 1; m <= top; ++m)
        if (e[m] - d[m] == i) ++count;
    return BigInt(count);
}

/// (min, max) of e over [2^{n-1}, 2^n].
inline std::pair<int, int> stats_extrema(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    if (n < 2) throw std::domain_error("stats_extrema needs n >= 2");
    require_cap("stats_extrema exponent", n, caps.histogram_n);
    const std::uint64_t top = std::uint64_t{1} << n;
    const auto& e = cache.degrees_up_to(top);
    int lo = e[top / 2], hi = e[top / 2];
    for (std::uint64_t m = top / 2; m <= top; ++m) {
        lo = std::min(lo, e[m]);
        hi = std::max(hi, e[m]);
    }
    return {lo, hi};
}

struct DegreeRange {
    std::uint64_t min_solution = 0;  // mdeg(n)
    std::uint64_t max_solution = 0;  // Mdeg(n)
    std::uint64_t count = 0;         // |{i : e(i) = n}|
};

/// Smallest and largest i with e(i) = n, by scanning [1, 2^{2n+1}]. Past that
/// bound every e(i) exceeds n, since min e on [2^{j-1}, 2^j] is floor(j/2).
inline DegreeRange stats_degree_range(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    require_cap("stats_degree_range n", n, caps.degree_range_n);
    const std::uint64_t top = std::uint64_t{1} << (2 * n + 1);
    const auto& e = cache.degrees_up_to(top);
    DegreeRange r;
    for (std::uint64_t m = 1; m <= top; ++m) {
        if (e[m] != static_cast<int>(n)) continue;
        if (r.count == 0) r.min_solution = m;
        r.max_solution = m;
        ++r.count;
    }
    return r;
}

namespace detail {

// Bivariate prefix: element k is the coefficient of y^k, a polynomial in x
// truncated to x_terms coefficients.
using YSeries = std::vector<IntPoly>;

inline YSeries y_multiply(const YSeries& a, const YSeries& b, std::size_t y_terms, std::size_t x_terms) {
    YSeries r(y_terms);
    for (std::size_t i = 0; i < std::min(a.size(), y_terms); ++i)
        for (std::size_t j = 0; i + j < y_terms && j < b.size(); ++j) r[i + j] += (a[i] * b[j]).truncated(x_terms);
    return r;
}

/// a / b where b's y^0 coefficient is the constant 1.
inline YSeries y_divide(const YSeries& a, const YSeries& b, std::size_t y_terms, std::size_t x_terms) {
    if (b.empty() || !(b[0] == IntPoly({1}))) throw std::domain_error("y-series divisor must start with 1");
    YSeries q(y_terms);
    for (std::size_t k = 0; k < y_terms; ++k) {
        IntPoly acc = k < a.size() ? a[k] : IntPoly{};
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= (b[j] * q[k - j]).truncated(x_terms);
        q[k] = acc.truncated(x_terms);
    }
    return q;
}

}  // namespace detail

/// Expands (1 - xy(1 + y - y^2)) / ((1 - y)(1 - xy)(1 - xy - 2xy^2)) in y,
/// keeping x_terms coefficients in x and y_terms in y, and compares the
/// y^n coefficient with H_n(x) for every n < y_terms.
inline bool bivariate_genfunc_check(std::size_t x_terms, std::size_t y_terms) {
    using detail::YSeries;
    const IntPoly one({1}), x = IntPoly::x();
    const YSeries numerator = {one, -x, -x, x};
    const YSeries f1 = {one, -one};
    const YSeries f2 = {one, -x};
    const YSeries f3 = {one, -x, x * BigInt(-2)};
    const std::size_t cap = y_terms + 4;
    const YSeries denominator = detail::y_multiply(detail::y_multiply(f1, f2, cap, x_terms), f3, cap, x_terms);
    YSeries num_t(numerator.size());
    for (std::size_t i = 0; i < numerator.size(); ++i) num_t[i] = numerator[i].truncated(x_terms);
    const YSeries series = detail::y_divide(num_t, denominator, y_terms, x_terms);
    for (std::size_t n = 0; n < y_terms; ++n)
        if (!(series[n] == h_poly(static_cast<unsigned>(n)).truncated(x_terms))) return false;
    return true;
}

enum class ChebyshevKind { first, second };

/// T_n or U_n from their explicit binomial sums.
inline IntPoly chebyshev_poly(ChebyshevKind kind, unsigned n) {
    if (n == 0) return IntPoly({1});
    std::vector<BigRational> cs(n + 1, BigRational(0));
    for (unsigned k = 0; k <= n / 2; ++k) {
        BigRational term = BigRational(exact::binomial(n - k, k) * exact::pow2(n - 2 * k));
        if (k % 2 == 1) term = -term;
        if (kind == ChebyshevKind::first) term *= exact::make_rational(n, 2 * (n - k));
        cs[n - 2 * k] += term;
    }
    return exact::to_int(RatPoly(std::move(cs)));
}

/// Evaluates H_n(x0) and 1/(1-3x0) + x0^n/2 + h_n(x0) with
/// h_n = (sqrt(2x)i)^n / (2(1-3x)) * (8 T_n(z) - 3(x+3) U_n(z)), z = -sqrt(2x)i/4,
/// in Gaussian rationals; 2x0 must be a rational square and x0 != 1/3.
inline bool h_decomposition_check(unsigned n, const BigRational& x0) {
    const BigRational third(1, 3);
    if (x0 == third) throw std::domain_error("x0 = 1/3 is a pole of the decomposition");
    const auto root = exact::rational_sqrt(2 * x0);
    if (!root) throw std::domain_error("2*x0 is not the square of a rational");
    const GaussianRational z(0, -*root / 4);
    const GaussianRational w = exact::pow(GaussianRational(0, *root), n);
    const BigRational one_minus_3x = 1 - 3 * x0;
    const GaussianRational bracket =
        GaussianRational(8) * exact::gaussian_poly_eval(chebyshev_poly(ChebyshevKind::first, n), z) -
        GaussianRational(BigRational(3 * (x0 + 3))) * exact::gaussian_poly_eval(chebyshev_poly(ChebyshevKind::second, n), z);
    const GaussianRational h = w * bracket / GaussianRational(BigRational(2 * one_minus_3x));
    const GaussianRational rhs =
        GaussianRational(BigRational(1 / one_minus_3x)) + GaussianRational(BigRational(exact::pow(x0, static_cast<long>(n)) / 2)) + h;
    const BigRational lhs = h_poly(n).evaluate<BigRational>(x0);
    return rhs == GaussianRational(lhs);
}

/// b[i] = c^i * sum_{j<=i} a[j] / c^j, i.e. the coefficients of A(x)/(1 - cx).
inline std::vector<BigRational> geometric_prefix_transform(const std::vector<BigRational>& a, const BigRational& c) {
    if (c == 0) throw std::domain_error("geometric_prefix_transform needs c != 0");
    std::vector<BigRational> b(a.size());
    BigRational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = acc * c + a[i];
        b[i] = acc;
    }
    return b;
}

/// e(i, n+2) = e(i-1, n+1) + 2 e(i-1, n) - [i = n+1] for 1 <= i <= n+2,
/// checked on brute-force histograms.
inline bool e_count_recurrence_check(unsigned n, SternCache& cache, const DegreeStatsCaps& caps = {}) {
    const auto h0 = degree_histogram(n, cache, caps).counts;
    const auto h1 = degree_histogram(n + 1, cache, caps).counts;
    const auto h2 = degree_histogram(n + 2, cache, caps).counts;
    auto at = [](const std::vector<BigInt>& v, long i) { return i >= 0 && i < static_cast<long>(v.size()) ? v[static_cast<std::size_t>(i)] : BigInt(0); };
    for (long i = 1; i <= static_cast<long>(n) + 2; ++i) {
        const BigInt expect = at(h1, i - 1) + 2 * at(h0, i - 1) - (i == static_cast<long>(n) + 1 ? 1 : 0);
        if (at(h2, i) != expect) return false;
    }
    return at(h2, 0) == 1;
}

}  // namespace stern
