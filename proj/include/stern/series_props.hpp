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

// Sign sums of (-1)^{e(i)}, the generating functions E_k(x) = sum e(n)^k x^n,
// their functional equations, and bounded probes of the open conjectures.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stern/core.hpp"
#include "stern/degree_stats.hpp"
#include "stern/errors.hpp"

namespace stern {

using exact::SeriesF2;
using exact::TruncatedSeries;

/// Index cap for direct scans of e(n).
inline constexpr std::uint64_t kSeriesScanLimit = std::uint64_t{1} << 20;

/// S(n) = sum_{i=1}^{n} (-1)^{e(i)}.
inline long sign_partial_sum(std::uint64_t n, SternCache& cache, std::uint64_t cap = kSeriesScanLimit) {
    if (n == 0) throw std::domain_error("sign_partial_sum needs n >= 1");
    require_cap("sign_partial_sum n", static_cast<long long>(n), static_cast<long long>(cap));
    const auto& e = cache.degrees_up_to(n);
    long s = 0;
    for (std::uint64_t i = 1; i <= n; ++i) s += (e[i] % 2 == 0) ? 1 : -1;
    return s;
}

/// t_0 = t_1 = 1, t_{n+2} = -t_{n+1} - 2 t_n.
inline std::vector<BigInt> t_sequence(std::size_t count) {
    std::vector<BigInt> t;
    t.reserve(count);
    for (std::size_t i = 0; i < count; ++i) t.push_back(i < 2 ? BigInt(1) : BigInt(-t[i - 1] - 2 * t[i - 2]));
    return t;
}

/// t_n = 4 (s_n - 1/4 - (-1)^n / 2) = 4 s_n - 1 - 2 (-1)^n.
inline BigInt t_from_s(const BigInt& s, unsigned n) { return 4 * s - 1 - (n % 2 == 0 ? 2 : -2); }

/// s_n = t_n / 4 + 1/4 + (-1)^n / 2, exact.
inline BigRational s_from_t(const BigInt& t, unsigned n) {
    return exact::make_rational(t, BigInt(4)) + exact::make_rational(1, 4) + exact::make_rational(n % 2 == 0 ? 1 : -1, 2);
}

struct SignSumRecord {
    std::uint64_t n = 0;
    long s_partial = 0;  // S(n)
    long s_seq = 0;      // s_n = S(2^n)
    BigInt t_seq;        // t_n
};

inline SignSumRecord sign_sum_record(unsigned n, SternCache& cache) {
    require_cap("sign_sum_record n", n, 20);
    SignSumRecord r;
    r.n = n;
    r.s_partial = n == 0 ? 0 : sign_partial_sum(n, cache);
    r.s_seq = sign_partial_sum(std::uint64_t{1} << n, cache);
    r.t_seq = t_from_s(BigInt(r.s_seq), n);
    return r;
}

/// s_n = S(2^n) for n <= max_n: checks s_0 = 1, s_1 = 0,
/// s_{n+2} = -s_{n+1} - 2 s_n + 1 + (-1)^n and s_n = H_n(-1).
inline bool s_recurrence_check(unsigned max_n, SternCache& cache) {
    require_cap("s_recurrence_check max_n", max_n, 20);
    std::vector<long> s;
    for (unsigned n = 0; n <= max_n; ++n) {
        s.push_back(sign_partial_sum(std::uint64_t{1} << n, cache));
        if (BigInt(s.back()) != h_poly(n).evaluate<BigInt>(BigInt(-1))) return false;
    }
    if (s[0] != 1 || (max_n >= 1 && s[1] != 0)) return false;
    for (unsigned n = 0; n + 2 <= max_n; ++n)
        if (s[n + 2] != -s[n + 1] - 2 * s[n] + 1 + (n % 2 == 0 ? 1 : -1)) return false;
    return true;
}

struct SignScan {
    BigInt min_seen;
    BigInt max_seen;
    unsigned max_same_sign_run = 0;
};

/// Extremes of t_0..t_{count-1} and the longest run of equal signs.
inline SignScan sign_change_scan(std::size_t count) {
    if (count == 0) throw std::domain_error("sign_change_scan needs count >= 1");
    const auto t = t_sequence(count);
    SignScan r{t[0], t[0], 1};
    unsigned run = 1;
    for (std::size_t i = 1; i < count; ++i) {
        r.min_seen = std::min(r.min_seen, t[i]);
        r.max_seen = std::max(r.max_seen, t[i]);
        run = (sgn(t[i]) == sgn(t[i - 1])) ? run + 1 : 1;
        r.max_same_sign_run = std::max(r.max_same_sign_run, run);
    }
    return r;
}

/// E_k(x) = sum_{n>=1} e(n)^k x^n to the given order (0^0 = 1, so E_0 = x/(1-x)).
inline TruncatedSeries ek_series(unsigned k, std::size_t order, SternCache& cache) {
    require_cap("series order", static_cast<long long>(order), static_cast<long long>(kSeriesScanLimit));
    TruncatedSeries s(order);
    if (order <= 1) return s;
    const auto& e = cache.degrees_up_to(order - 1);
    std::vector<BigRational> cs(order, BigRational(0));
    for (std::size_t n = 1; n < order; ++n) cs[n] = BigRational(exact::pow(BigInt(e[n]), k));
    return TruncatedSeries(std::move(cs));
}

inline TruncatedSeries e1_series(std::size_t order, SternCache& cache) { return ek_series(1, order, cache); }

namespace detail {

/// E(x^2) + (x^2 + 1)/x E(x^4), from a series of order `order` + 1.
inline TruncatedSeries dyadic_part(const TruncatedSeries& f) {
    const TruncatedSeries f2 = exact::series_substitute_power(f, 2);
    const TruncatedSeries f4 = exact::series_substitute_power(f, 4);
    return f2 + exact::RatPoly({1, 0, 1}) * f4.divided_by_x();
}

}  // namespace detail

/// Left minus right side of the k-th functional equation, to the given order:
/// k = 0: E_0 - x/(1-x);
/// k >= 1: E_k(x) - E_k(x^2) - (x^2+1)/x E_k(x^4) - sum_{j<k} C(k,j)(E_j(x^2) + (x^2+1)/x E_j(x^4)).
inline TruncatedSeries functional_equation_residual(unsigned k, std::size_t order, SternCache& cache) {
    if (k == 0) {
        const auto closed = exact::series_expand(exact::ratfunc_normalize(exact::RatPoly({0, 1}), exact::RatPoly({1, -1})), order);
        return ek_series(0, order, cache) - closed;
    }
    const std::size_t work = order + 1;
    const TruncatedSeries ek = ek_series(k, work, cache);
    TruncatedSeries r = ek - detail::dyadic_part(ek);
    for (unsigned j = 0; j < k; ++j)
        r = r - BigRational(exact::binomial(k, j)) * detail::dyadic_part(ek_series(j, work, cache));
    return r.truncated(order);
}

/// E_1(x) - E_1(x^2) - (x^2+1)/x E_1(x^4) - x^2/(1-x), to the given order.
inline TruncatedSeries e1_functional_equation_residual(std::size_t order, SternCache& cache) {
    const TruncatedSeries e1 = e1_series(order + 1, cache);
    const auto tail = exact::series_expand(exact::ratfunc_normalize(exact::RatPoly({0, 0, 1}), exact::RatPoly({1, -1})), order + 1);
    return (e1 - detail::dyadic_part(e1) - tail).truncated(order);
}

struct F2Verdict {
    bool derived_ok = false;
    bool paper_form_ok = false;
};

/// E = E_1 mod 2 substituted into
/// (1+x)(1+x^2) T^4 + x(1+x) T^2 + x(1+x) T + c over F_2,
/// with c = x^3 (from the functional equation times x(1-x)) and c = x^2 (the stated form).
/// Each verdict is whether the residual vanishes below x^{order-4}.
inline std::pair<SeriesF2, SeriesF2> f2_quartic_residuals(std::size_t order, SternCache& cache) {
    if (order < 16) throw std::domain_error("f2_algebraic_check needs order >= 16");
    const SeriesF2 e = SeriesF2::reduce(e1_series(order, cache));
    const SeriesF2 e2 = e.square();
    const SeriesF2 e4 = e2.square();
    const SeriesF2 a4 = SeriesF2::from_exponents({0, 1, 2, 3}, order);
    const SeriesF2 a12 = SeriesF2::from_exponents({1, 2}, order);
    const SeriesF2 body = a4 * e4 + a12 * e2 + a12 * e;
    return {body + SeriesF2::from_exponents({3}, order), body + SeriesF2::from_exponents({2}, order)};
}

inline F2Verdict f2_algebraic_check(std::size_t order, SternCache& cache) {
    const auto [derived, stated] = f2_quartic_residuals(order, cache);
    return {derived.is_zero_below(order - 4), stated.is_zero_below(order - 4)};
}

/// True iff no p/q over F_2 with deg p, deg q <= max_deg and q(0) = 1 agrees
/// with E_1 mod 2 to the given order.
inline bool rationality_refutation_scan(unsigned max_deg, std::size_t order, SternCache& cache) {
    require_cap("rationality scan degree", max_deg, 6);
    if (order < 4 * static_cast<std::size_t>(max_deg) + 8) throw std::domain_error("rationality scan needs order >= 4 D + 8");
    const SeriesF2 e = SeriesF2::reduce(e1_series(order, cache));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << max_deg); ++mask) {
        SeriesF2 q(order);
        q.set(0, true);
        for (unsigned i = 0; i < max_deg; ++i)
            if ((mask >> i) & 1) q.set(i + 1, true);
        const SeriesF2 p = q * e;
        bool poly = true;
        for (std::size_t i = max_deg + 1; i < order && poly; ++i) poly = !p[i];
        if (poly) return false;
    }
    return true;
}

struct MaxCoeffReport {
    unsigned n = 0;
    BigInt lhs;  // max over m in [2^{n-1}, 2^n] of the largest coefficient of t^1..t^{e(m)} in B_m
    BigInt rhs;  // max of C(n - j, j), 0 <= j <= floor(n/2)
    bool match = false;
};

inline MaxCoeffReport maxcoeff_conjecture_check(unsigned n, SternCache& cache) {
    if (n == 0) throw std::domain_error("maxcoeff_conjecture_check needs n >= 1");
    require_cap("maxcoeff_conjecture_check n", n, 20);
    MaxCoeffReport r;
    r.n = n;
    for (std::uint64_t m = std::uint64_t{1} << (n - 1); m <= (std::uint64_t{1} << n); ++m) {
        const IntPoly& b = cache.poly(m);
        for (long i = 1; i <= b.degree(); ++i) r.lhs = std::max(r.lhs, b.coeff(static_cast<std::size_t>(i)));
    }
    for (long j = 0; j <= static_cast<long>(n) / 2; ++j) r.rhs = std::max(r.rhs, exact::binomial(static_cast<long>(n) - j, j));
    r.match = r.lhs == r.rhs;
    return r;
}

namespace detail {

inline std::size_t rational_rank(std::vector<std::vector<BigRational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const BigRational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// True iff no rational p/q over Q with deg p, deg q <= max_deg agrees with
/// E_k to the given order: the system "coefficients max_deg+1 .. order-1 of
/// q E_k vanish" has only q = 0.
inline bool transcendence_conjecture_probe(unsigned k, unsigned max_deg, std::size_t order, SternCache& cache) {
    if (order <= static_cast<std::size_t>(max_deg) + 1) throw std::domain_error("probe order must exceed max_deg + 1");
    const TruncatedSeries ek = ek_series(k, order, cache);
    std::vector<std::vector<BigRational>> m;
    for (std::size_t row = max_deg + 1; row < order; ++row) {
        std::vector<BigRational> line(max_deg + 1, BigRational(0));
        for (std::size_t j = 0; j <= max_deg; ++j) line[j] = ek[row - j];
        m.push_back(std::move(line));
    }
    return detail::rational_rank(std::move(m)) == static_cast<std::size_t>(max_deg) + 1;
}

}  // namespace stern
