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
#include <string>
#include <utility>

#include "stern/exact/polynomial.hpp"

namespace stern::exact {

/// x^shift * base(x), with base(0) != 0 unless the value is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(IntPoly base, long shift = 0) : base_(std::move(base)), shift_(shift) { normalize(); }

    const IntPoly& base() const noexcept { return base_; }
    long shift() const noexcept { return shift_; }
    bool is_zero() const noexcept { return base_.is_zero(); }

    /// Lowest and highest exponents present.
    long min_exponent() const { return shift_; }
    long max_exponent() const { return shift_ + base_.degree(); }

    BigInt coeff(long exponent) const {
        if (exponent < shift_) return 0;
        return base_.coeff(static_cast<std::size_t>(exponent - shift_));
    }

    /// The polynomial x^k * value; requires k + shift >= 0.
    IntPoly times_power(long k) const {
        if (is_zero()) return {};
        if (k + shift_ < 0) throw std::domain_error("Laurent polynomial has negative exponents left");
        return base_.shifted(static_cast<std::size_t>(k + shift_));
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return {a.base_ * b.base_, a.shift_ + b.shift_};
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long s = std::min(a.shift_, b.shift_);
        return {a.base_.shifted(static_cast<std::size_t>(a.shift_ - s)) +
                    b.base_.shifted(static_cast<std::size_t>(b.shift_ - s)),
                s};
    }
    friend LaurentPoly operator-(const LaurentPoly& a) { return {-a.base_, a.shift_}; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.base_ == b.base_ && a.shift_ == b.shift_;
    }

    std::string str(std::string_view var = "t") const {
        if (shift_ == 0) return to_string(base_, var);
        return "(" + to_string(base_, var) + ")*" + std::string(var) + "^" + std::to_string(shift_);
    }

private:
    void normalize() {
        if (base_.is_zero()) {
            shift_ = 0;
            return;
        }
        const long v = base_.valuation();
        if (v > 0) {
            base_ = base_.unshifted(static_cast<std::size_t>(v));
            shift_ += v;
        }
    }

    IntPoly base_;
    long shift_ = 0;
};

}  // namespace stern::exact
