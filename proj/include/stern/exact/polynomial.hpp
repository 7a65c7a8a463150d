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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stern/exact/integer.hpp"

namespace stern::exact {

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
/// The zero polynomial has no stored coefficients and degree -1.
template <typename C>
class Poly {
public:
    using coeff_type = C;

    Poly() = default;
    Poly(std::initializer_list<C> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }

    static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }

    /// v * x^k
    static Poly monomial(const C& v, std::size_t k) {
        std::vector<C> cs(k + 1, C(0));
        cs[k] = v;
        return Poly(std::move(cs));
    }

    static Poly x() { return monomial(C(1), 1); }

    const std::vector<C>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }

    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
    const C& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Multiplicity of the root x = 0; the zero polynomial has none.
    long valuation() const {
        if (c_.empty()) throw std::domain_error("valuation of zero polynomial");
        std::size_t i = 0;
        while (c_[i] == 0) ++i;
        return static_cast<long>(i);
    }

    template <typename V>
    V evaluate(const V& at) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + V(*it);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const C& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& v : c_) v *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator*(const C& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> r(k, C(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r));
    }

    /// Drops the lowest k coefficients (division by x^k); they must be zero.
    Poly unshifted(std::size_t k) const {
        for (std::size_t i = 0; i < std::min(k, c_.size()); ++i)
            if (c_[i] != 0) throw std::domain_error("polynomial not divisible by x^k");
        if (k >= c_.size()) return {};
        return Poly(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /// p(x^k)
    Poly substitute_power(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("substitute_power needs k >= 1");
        if (is_zero()) return {};
        std::vector<C> r((c_.size() - 1) * k + 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return Poly(std::move(r));
    }

    Poly truncated(std::size_t n) const {
        if (n >= c_.size()) return *this;
        return Poly(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<C> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRational>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<BigRational> cs;
    cs.reserve(p.size());
    for (const auto& v : p.coeffs()) cs.emplace_back(v);
    return RatPoly(std::move(cs));
}

/// Exact conversion; throws if some coefficient is not an integer.
inline IntPoly to_int(const RatPoly& p) {
    std::vector<BigInt> cs;
    cs.reserve(p.size());
    for (const auto& v : p.coeffs()) {
        if (!is_integer(v)) throw std::domain_error("polynomial has non-integer coefficient");
        cs.push_back(v.get_num());
    }
    return IntPoly(std::move(cs));
}

inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& v : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> cs;
    cs.reserve(p.size());
    for (const auto& v : p.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        cs.push_back(std::move(q));
    }
    return IntPoly(std::move(cs));
}

/// Scales a rational polynomial by the lcm of its denominators and returns
/// the primitive integer polynomial with the same roots.
inline IntPoly primitive_part(const RatPoly& p) {
    BigInt l = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> cs;
    cs.reserve(p.size());
    for (const auto& v : p.coeffs()) cs.push_back(v.get_num() * (l / v.get_den()));
    return primitive_part(IntPoly(std::move(cs)));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    const long db = b.degree();
    const BigInt& lb = b.leading();
    std::vector<BigInt> r = a.coeffs();
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= db) {
        BigInt lr = r[static_cast<std::size_t>(dr)];
        for (auto& v : r) v *= lb;
        const long shift = dr - db;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b.coeffs()[static_cast<std::size_t>(i)];
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
    }
    return IntPoly(std::move(r));
}

/// Greatest common divisor over Q, returned as a primitive integer polynomial
/// with positive leading coefficient (gcd(0, 0) = 0).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> r = a.coeffs();
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) return {RatPoly{}, a};
    std::vector<BigRational> q(static_cast<std::size_t>(da - db + 1), BigRational(0));
    const BigRational inv_lb = BigRational(1) / b.leading();
    for (long i = da; i >= db; --i) {
        const BigRational f = r[static_cast<std::size_t>(i)] * inv_lb;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Division known to be exact; throws if a remainder appears.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    return to_int(exact_div(to_rat(a), to_rat(b)));
}

inline bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).second.is_zero(); }

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p * (BigRational(1) / p.leading());
}

inline RatPoly derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    std::vector<BigRational> cs(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) cs[i - 1] = p.coeffs()[i] * static_cast<long>(i);
    return RatPoly(std::move(cs));
}

namespace detail {
inline std::string coeff_text(const BigInt& v) { return v.get_str(); }
inline std::string coeff_text(const BigRational& v) {
    return is_integer(v) ? v.get_str() : "(" + v.get_str() + ")";
}
}  // namespace detail

/// Ascending-order rendering, e.g. "1 + 2t - t^3".
template <typename C>
std::string to_string(const Poly<C>& p, std::string_view var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        C v = p.coeffs()[i];
        if (v == 0) continue;
        const bool neg = v < 0;
        if (neg) v = -v;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += detail::coeff_text(v);
            continue;
        }
        if (v != 1) out += detail::coeff_text(v);
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace stern::exact
