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

#include <stdexcept>
#include <string>

#include "stern/exact/integer.hpp"
#include "stern/exact/polynomial.hpp"

namespace stern::exact {

/// re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const BigInt& v) : re_(v), im_(0) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const noexcept { return re_; }
    const BigRational& im() const noexcept { return im_; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conjugate() const { return {re_, -im_}; }
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational r = re_ * o.re_ - im_ * o.im_;
        BigRational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        const BigRational n = o.norm();
        if (n == 0) throw std::domain_error("gaussian division by zero");
        *this *= o.conjugate();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string str() const { return re_.get_str() + (im_ < 0 ? " - " : " + ") + BigRational(abs(im_)).get_str() + "i"; }

private:
    BigRational re_{0};
    BigRational im_{0};
};

inline GaussianRational pow(const GaussianRational& z, unsigned long n) {
    GaussianRational acc(1), base = z;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

/// Horner evaluation of an integer polynomial at a Gaussian rational.
inline GaussianRational gaussian_poly_eval(const IntPoly& p, const GaussianRational& z) {
    return p.evaluate<GaussianRational>(z);
}

}  // namespace stern::exact
