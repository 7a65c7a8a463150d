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

// Sums of 1/(B_i B_{i+1}) over dyadic blocks, and the auxiliary family S_k(t)
// that appears in their closed form. All logarithms are base 2.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "stern/core.hpp"
#include "stern/errors.hpp"

namespace stern {

/// S_1 = S_2 = 0, S_{2k} = t S_k, S_{2k+1} = S_k + S_{k+1} + t^{floor(log2 k)}.
class AuxSternFamily {
public:
    static constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;

    const IntPoly& poly(std::uint64_t k) {
        if (k == 0) throw std::domain_error("S_0 is undefined");
        require_cap("auxiliary polynomial index", static_cast<long long>(k), static_cast<long long>(kLimit));
        if (s_.empty()) s_ = {IntPoly{}, IntPoly{}, IntPoly{}};
        while (s_.size() <= k) {
            const std::uint64_t m = s_.size();
            const std::uint64_t h = m / 2;
            if (m % 2 == 0) {
                s_.push_back(s_[h].shifted(1));
            } else {
                s_.push_back(s_[h] + s_[h + 1] + IntPoly::monomial(1, static_cast<std::size_t>(floor_log2(h))));
            }
        }
        return s_[k];
    }

private:
    std::deque<IntPoly> s_;  // index 0 unused
};

inline const IntPoly& aux_poly(std::uint64_t k, AuxSternFamily& family) { return family.poly(k); }

/// (2-t)(B_n S_{n+1} - S_n B_{n+1}) = t^{floor(log2 n)} (B_{n+1} - B_n - t + 1).
inline bool lemma_identity_check(std::uint64_t n, SternCache& cache, AuxSternFamily& family) {
    if (n == 0) throw std::domain_error("lemma identity needs n >= 1");
    const IntPoly two_minus_t({2, -1});
    const IntPoly& bn = cache.poly(n);
    const IntPoly& bn1 = cache.poly(n + 1);
    const IntPoly lhs = two_minus_t * (bn * family.poly(n + 1) - family.poly(n) * bn1);
    const IntPoly rhs = (bn1 - bn - IntPoly({-1, 1})).shifted(static_cast<std::size_t>(floor_log2(n)));
    return lhs == rhs;
}

/// (2-t) S_{2k+1}/(t^L B_{2k+1}) = (2-t) S_k/(t^L B_k) + (B_{k+1} - (t-1)(B_k + 1))/(B_k B_{2k+1}),
/// L = floor(log2 k), compared after multiplying through by t^L B_k B_{2k+1}.
inline bool corollary_identity_check(std::uint64_t k, SternCache& cache, AuxSternFamily& family) {
    if (k == 0) throw std::domain_error("corollary identity needs k >= 1");
    const IntPoly two_minus_t({2, -1});
    const IntPoly bk = cache.poly(k);
    const IntPoly bk1 = cache.poly(k + 1);
    const IntPoly b2k1 = cache.poly(2 * k + 1);
    const IntPoly lhs = two_minus_t * family.poly(2 * k + 1) * bk;
    const IntPoly tail = bk1 - IntPoly({-1, 1}) * (bk + IntPoly({1}));
    const IntPoly rhs = two_minus_t * family.poly(k) * b2k1 + tail.shifted(static_cast<std::size_t>(floor_log2(k)));
    return lhs == rhs;
}

/// Memoized prefix sums F(m) = sum_{i=1}^{m-1} 1/(B_i B_{i+1}).
class ReciprocalPrefix {
public:
    const RationalFunction& upto(std::uint64_t m, SternCache& cache) {
        if (m == 0) throw std::domain_error("prefix sums start at m = 1");
        if (f_.empty()) f_ = {RationalFunction(), RationalFunction()};
        while (f_.size() <= m) {
            const std::uint64_t i = f_.size() - 1;
            const RationalFunction term = RationalFunction(1) / RationalFunction(cache.poly(i) * cache.poly(i + 1));
            f_.push_back(f_.back() + term);
        }
        return f_[m];
    }

private:
    std::deque<RationalFunction> f_;  // f_[m] = F(m); index 0 unused
};

/// sum_{i=k 2^n}^{k 2^{n+1}} 1/(B_i B_{i+1}), reduced. Needs k 2^{n+1} <= cap.
inline RationalFunction reciprocal_sum_lhs(std::uint64_t k, unsigned n, SternCache& cache, ReciprocalPrefix& prefix,
                                           std::uint64_t cap = std::uint64_t{1} << 14) {
    if (k == 0) throw std::domain_error("reciprocal sums need k >= 1");
    require_cap("reciprocal sum upper index", n >= 63 ? static_cast<long long>(cap) + 1 : static_cast<long long>(k << (n + 1)),
                static_cast<long long>(cap));
    const std::uint64_t lo = k << n;
    const std::uint64_t hi = k << (n + 1);
    return prefix.upto(hi + 1, cache) - prefix.upto(lo, cache);
}

/// (2-t) S_k / (t^{n+L+1} B_k) + (1/B_{k 2^{n+1}+1} + 1) / (t^{n+1} B_k), L = floor(log2 k).
inline RationalFunction reciprocal_sum_rhs(std::uint64_t k, unsigned n, SternCache& cache, AuxSternFamily& family,
                                           std::uint64_t cap = std::uint64_t{1} << 14) {
    if (k == 0) throw std::domain_error("reciprocal sums need k >= 1");
    require_cap("reciprocal sum upper index", n >= 63 ? static_cast<long long>(cap) + 1 : static_cast<long long>(k << (n + 1)),
                static_cast<long long>(cap));
    const auto shift = static_cast<std::size_t>(n + floor_log2(k) + 1);
    const RationalFunction bk(cache.poly(k));
    const RationalFunction first =
        RationalFunction(IntPoly({2, -1}) * family.poly(k)) / (RationalFunction(IntPoly::monomial(1, shift)) * bk);
    const RationalFunction tail = RationalFunction(1) / RationalFunction(cache.poly((k << (n + 1)) + 1)) + RationalFunction(1);
    return first + tail / (RationalFunction(IntPoly::monomial(1, n + 1)) * bk);
}

/// The block sum evaluated at t = t0 term by term, from values of B_i(t0).
inline BigRational reciprocal_sum_lhs_at(std::uint64_t k, unsigned n, const BigRational& t0,
                                         std::uint64_t cap = std::uint64_t{1} << 20) {
    if (k == 0) throw std::domain_error("reciprocal sums need k >= 1");
    require_cap("pointwise reciprocal sum upper index", n >= 63 ? static_cast<long long>(cap) + 1 : static_cast<long long>(k << (n + 1)),
                static_cast<long long>(cap));
    const std::uint64_t lo = k << n;
    const std::uint64_t hi = k << (n + 1);
    std::vector<BigRational> b(hi + 2);
    b[0] = 0;
    b[1] = 1;
    for (std::uint64_t i = 2; i <= hi + 1; ++i) {
        if (i % 2 == 0) {
            b[i] = t0 * b[i / 2];
        } else {
            b[i] = b[i / 2] + b[i / 2 + 1];
        }
    }
    BigRational sum = 0;
    for (std::uint64_t i = lo; i <= hi; ++i) {
        const BigRational d = b[i] * b[i + 1];
        if (d == 0) throw std::domain_error("B_i(t0) vanishes inside the block");
        sum += 1 / d;
    }
    return sum;
}

struct ReciprocalTheoremCaps {
    std::uint64_t exact = std::uint64_t{1} << 12;      // symbolic comparison up to this upper index
    std::uint64_t pointwise = std::uint64_t{1} << 20;  // evaluation fallback beyond it
};

/// lhs = rhs for the block (k, n). Up to caps.exact both sides are compared
/// as reduced rational functions; beyond it they are compared at
/// deg(num) + deg(den) + 2 of the points t = 2, 3, 4, ... (B_i(t) > 0 there),
/// using the reduced degrees of the right side.
inline bool reciprocal_theorem_check(std::uint64_t k, unsigned n, SternCache& cache, ReciprocalPrefix& prefix,
                                     AuxSternFamily& family, const ReciprocalTheoremCaps& caps = {}) {
    if (k == 0) throw std::domain_error("reciprocal sums need k >= 1");
    const bool small = n < 62 && (k << (n + 1)) <= caps.exact;
    if (small) return reciprocal_sum_lhs(k, n, cache, prefix, caps.exact) == reciprocal_sum_rhs(k, n, cache, family, caps.exact);
    const RationalFunction rhs = reciprocal_sum_rhs(k, n, cache, family, caps.pointwise);
    const long points = rhs.numerator().degree() + rhs.denominator().degree() + 2;
    for (long p = 0; p < points; ++p) {
        const BigRational t0(p + 2);
        if (reciprocal_sum_lhs_at(k, n, t0, caps.pointwise) != rhs.evaluate(t0)) return false;
    }
    return true;
}

/// sum_{i=m}^{2m-1} 1/(s(i) s(i+1)); equals 1.
inline BigRational urbiha_sum(std::uint64_t m, SternCache& cache, std::uint64_t cap = std::uint64_t{1} << 22) {
    if (m == 0) throw std::domain_error("urbiha_sum needs m >= 1");
    require_cap("urbiha_sum upper index", static_cast<long long>(2 * m), static_cast<long long>(cap));
    BigRational sum = 0;
    BigInt prev = cache.number(m);
    for (std::uint64_t i = m; i < 2 * m; ++i) {
        BigInt next = cache.number(i + 1);
        sum += exact::make_rational(BigInt(1), prev * next);
        prev = std::move(next);
    }
    return sum;
}

/// The recurrences behind the closed form, checked for one k:
/// P_{k,n+1} = P_{k,n}/t - 1/(t B_{k2^{n+1}+1} B_{k2^{n+2}+1}) for n = 0, 1 and both sides,
/// X_{2k} = X_k/t - 1/(t B_{2k+1} B_{4k+1}) and
/// X_{2k+1} = X_k/t - (t+1) B_{k+1}/(t B_k B_{2k+1} B_{4k+3}) for X = P and X = Q,
/// where P_k = P_{k,0} is the block sum and Q_k = Q_{k,0} the closed form.
inline bool p_q_recurrence_checks(std::uint64_t k, SternCache& cache, ReciprocalPrefix& prefix, AuxSternFamily& family,
                                  std::uint64_t cap = std::uint64_t{1} << 14) {
    if (k == 0) throw std::domain_error("recurrence checks need k >= 1");
    require_cap("recurrence check upper index", static_cast<long long>(8 * k + 8), static_cast<long long>(cap));
    const RationalFunction t(IntPoly::x());
    auto B = [&](std::uint64_t i) { return RationalFunction(cache.poly(i)); };
    auto P = [&](std::uint64_t kk, unsigned n) { return reciprocal_sum_lhs(kk, n, cache, prefix, cap); };
    auto Q = [&](std::uint64_t kk, unsigned n) { return reciprocal_sum_rhs(kk, n, cache, family, cap); };
    for (unsigned n = 0; n <= 1; ++n) {
        const RationalFunction step = RationalFunction(1) / (t * B((k << (n + 1)) + 1) * B((k << (n + 2)) + 1));
        if (!(P(k, n + 1) == P(k, n) / t - step)) return false;
        if (!(Q(k, n + 1) == Q(k, n) / t - step)) return false;
    }
    const RationalFunction even_step = RationalFunction(1) / (t * B(2 * k + 1) * B(4 * k + 1));
    const RationalFunction odd_step =
        RationalFunction(IntPoly({1, 1}) * cache.poly(k + 1)) / (t * B(k) * B(2 * k + 1) * B(4 * k + 3));
    if (!(P(2 * k, 0) == P(k, 0) / t - even_step)) return false;
    if (!(Q(2 * k, 0) == Q(k, 0) / t - even_step)) return false;
    if (!(P(2 * k + 1, 0) == P(k, 0) / t - odd_step)) return false;
    return Q(2 * k + 1, 0) == Q(k, 0) / t - odd_step;
}

}  // namespace stern
