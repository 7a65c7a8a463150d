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
#include <initializer_list>
#include <string>
#include <vector>

#include "stern/exact/series.hpp"

namespace stern::exact {

/// Power-series prefix over the two-element field, truncated at order().
class SeriesF2 {
public:
    SeriesF2() = default;
    explicit SeriesF2(std::size_t order) : bits_(order, false) {}
    explicit SeriesF2(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Series whose set exponents are listed (a polynomial, truncated).
    static SeriesF2 from_exponents(std::initializer_list<std::size_t> exps, std::size_t order) {
        SeriesF2 s(order);
        for (auto e : exps)
            if (e < order) s.bits_[e] = !s.bits_[e];
        return s;
    }

    /// Coefficient-wise reduction mod 2; all coefficients must be integers.
    static SeriesF2 reduce(const TruncatedSeries& f) {
        SeriesF2 s(f.order());
        for (std::size_t i = 0; i < f.order(); ++i) {
            if (!is_integer(f[i])) throw std::domain_error("cannot reduce a non-integer coefficient mod 2");
            s.bits_[i] = mpz_odd_p(f[i].get_num_mpz_t()) != 0;
        }
        return s;
    }

    std::size_t order() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_.at(i); }
    void set(std::size_t i, bool v) { bits_.at(i) = v; }

    bool is_zero() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }
    bool is_zero_below(std::size_t n) const {
        for (std::size_t i = 0; i < std::min(n, order()); ++i)
            if (bits_[i]) return false;
        return true;
    }
    /// Lowest set exponent, or order() for the zero prefix.
    std::size_t valuation() const {
        std::size_t i = 0;
        while (i < order() && !bits_[i]) ++i;
        return i;
    }

    friend SeriesF2 operator+(const SeriesF2& a, const SeriesF2& b) {
        SeriesF2 r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.bits_[i] = a.bits_[i] != b.bits_[i];
        return r;
    }
    friend SeriesF2 operator*(const SeriesF2& a, const SeriesF2& b) {
        SeriesF2 r(std::min(a.order(), b.order()));
        const std::size_t n = r.order();
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.bits_[i]) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b.bits_[j]) r.bits_[i + j] = !r.bits_[i + j];
        }
        return r;
    }
    friend bool operator==(const SeriesF2& a, const SeriesF2& b) { return a.bits_ == b.bits_; }

    SeriesF2 square() const { return *this * *this; }

    SeriesF2 substitute_power(std::size_t k) const {
        SeriesF2 r(order());
        for (std::size_t i = 0; i * k < order(); ++i) r.bits_[i * k] = bits_[i];
        return r;
    }

    SeriesF2 truncated(std::size_t n) const {
        SeriesF2 r = *this;
        if (n < order()) r.bits_.resize(n);
        return r;
    }

    std::string str() const {
        std::string s;
        s.reserve(order());
        for (bool b : bits_) s += b ? '1' : '0';
        return s;
    }

private:
    std::vector<bool> bits_;
};

}  // namespace stern::exact
