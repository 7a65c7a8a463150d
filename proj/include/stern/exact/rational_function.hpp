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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stern/exact/laurent.hpp"
#include "stern/exact/polynomial.hpp"

namespace stern::exact {

/// Reduced quotient num/den over Q: gcd(num, den) = 1 and den is monic.
/// Zero is 0/1. Equality of values is equality of the stored pair.
class RationalFunction {
public:
    RationalFunction() : den_(RatPoly::constant(1)) {}
    RationalFunction(const BigRational& c) : num_(RatPoly::constant(c)), den_(RatPoly::constant(1)) {}
    RationalFunction(long c) : RationalFunction(BigRational(c)) {}
    RationalFunction(const RatPoly& p) : num_(p), den_(RatPoly::constant(1)) {}
    RationalFunction(const IntPoly& p) : num_(to_rat(p)), den_(RatPoly::constant(1)) {}
    RationalFunction(const LaurentPoly& p) {
        if (p.shift() >= 0) {
            num_ = to_rat(p.times_power(0));
            den_ = RatPoly::constant(1);
        } else {
            num_ = to_rat(p.base());
            den_ = RatPoly::monomial(1, static_cast<std::size_t>(-p.shift()));
        }
    }

    /// Builds the reduced form of num/den.
    static RationalFunction normalize(RatPoly num, RatPoly den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        RationalFunction f;
        if (num.is_zero()) return f;
        if (den.degree() > 0 && num.degree() > 0) {
            const IntPoly g = gcd(primitive_part(num), primitive_part(den));
            if (g.degree() > 0) {
                const RatPoly gr = to_rat(g);
                num = exact_div(num, gr);
                den = exact_div(den, gr);
            }
        }
        const BigRational lc = den.leading();
        if (lc != 1) {
            const BigRational inv = BigRational(1) / lc;
            num *= inv;
            den *= inv;
        }
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }
    static RationalFunction normalize(const IntPoly& num, const IntPoly& den) {
        return normalize(to_rat(num), to_rat(den));
    }

    const RatPoly& numerator() const noexcept { return num_; }
    const RatPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    BigRational evaluate(const BigRational& at) const {
        const BigRational d = den_.evaluate<BigRational>(at);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_.evaluate<BigRational>(at) / d;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return normalize(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
        return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return normalize(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return normalize(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(std::string_view var = "x") const {
        if (is_polynomial()) return to_string(num_ * (BigRational(1) / den_.leading()), var);
        return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
    }

private:
    RatPoly num_;
    RatPoly den_;
};

inline RationalFunction ratfunc_normalize(const RatPoly& num, const RatPoly& den) {
    return RationalFunction::normalize(num, den);
}

using RationalMatrix = std::vector<std::vector<RationalFunction>>;

/// Determinant by Gaussian elimination over the field of rational functions.
inline RationalFunction ratfunc_matrix_determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    RationalFunction det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const RationalFunction inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const RationalFunction f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace stern::exact
