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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stern/exact/polynomial.hpp"
#include "stern/exact/rational_function.hpp"

namespace stern::exact {

/// Power-series prefix a_0 + a_1 x + ... + a_{N-1} x^{N-1} + O(x^N) over Q.
/// order() is N: every stored coefficient is exact, nothing is known past it.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : c_(order, BigRational(0)) {}
    TruncatedSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {}

    template <typename C>
    static TruncatedSeries from_poly(const Poly<C>& p, std::size_t order) {
        TruncatedSeries s(order);
        for (std::size_t i = 0; i < std::min(order, p.size()); ++i) s.c_[i] = p.coeffs()[i];
        return s;
    }

    std::size_t order() const noexcept { return c_.size(); }
    const std::vector<BigRational>& coeffs() const noexcept { return c_; }
    const BigRational& operator[](std::size_t i) const { return c_.at(i); }
    BigRational& operator[](std::size_t i) { return c_.at(i); }

    /// Index of the first nonzero coefficient, or order() if the prefix is zero.
    std::size_t valuation() const {
        std::size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        return i;
    }
    bool is_zero() const { return valuation() == c_.size(); }

    TruncatedSeries truncated(std::size_t order) const {
        TruncatedSeries r = *this;
        if (order < r.c_.size()) r.c_.resize(order);
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const BigRational& s, TruncatedSeries a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        const std::size_t n = r.order();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    /// Multiplication by an exact polynomial keeps the order.
    template <typename C>
    friend TruncatedSeries operator*(const Poly<C>& p, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.coeffs()[i] == 0) continue;
            const BigRational pi(p.coeffs()[i]);
            for (std::size_t j = 0; i + j < r.order(); ++j) r.c_[i + j] += pi * a.c_[j];
        }
        return r;
    }

    /// Quotient a/b. If b has valuation v then a must too, and the result
    /// loses v terms of precision.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t v = b.valuation();
        if (v == b.order()) throw std::domain_error("series division by zero prefix");
        if (a.valuation() < v) throw std::domain_error("series quotient has a pole at the origin");
        const std::size_t n = std::min(a.order(), b.order()) - v;
        TruncatedSeries r(n);
        const BigRational inv = BigRational(1) / b.c_[v];
        for (std::size_t i = 0; i < n; ++i) {
            BigRational acc = a.c_[i + v];
            for (std::size_t j = 1; j <= i; ++j)
                if (b.c_[j + v] != 0) acc -= b.c_[j + v] * r.c_[i - j];
            r.c_[i] = acc * inv;
        }
        return r;
    }

    /// Division by x; the constant term must vanish.
    TruncatedSeries divided_by_x() const {
        if (c_.empty()) return *this;
        if (c_[0] != 0) throw std::domain_error("series has nonzero constant term");
        return TruncatedSeries(std::vector<BigRational>(c_.begin() + 1, c_.end()));
    }

    /// Multiplication by x^k keeps the order (top coefficients fall off).
    TruncatedSeries shifted(std::size_t k) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i + k < order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// True if a and b coincide on their mutually valid prefix.
    friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        for (std::size_t i = 0; i < n; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    std::vector<BigRational> c_;
};

/// f(x) -> f(x^k); the coefficient of x^{ki} becomes the old coefficient of x^i.
inline TruncatedSeries series_substitute_power(const TruncatedSeries& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("series_substitute_power needs k >= 1");
    TruncatedSeries r(f.order());
    for (std::size_t i = 0; i * k < f.order(); ++i) r[i * k] = f[i];
    return r;
}

/// Maclaurin prefix of a rational function with no pole at the origin.
inline TruncatedSeries series_expand(const RationalFunction& f, std::size_t order) {
    const RatPoly& den = f.denominator();
    if (den.coeff(0) == 0) throw std::domain_error("rational function has a pole at the origin");
    const RatPoly& num = f.numerator();
    TruncatedSeries r(order);
    const BigRational inv = BigRational(1) / den.coeff(0);
    for (std::size_t i = 0; i < order; ++i) {
        BigRational acc = num.coeff(i);
        const std::size_t top = std::min<std::size_t>(i, den.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc -= den.coeffs()[j] * r[i - j];
        r[i] = acc * inv;
    }
    return r;
}

}  // namespace stern::exact
