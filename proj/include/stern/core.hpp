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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stern/exact.hpp"

namespace stern {

using exact::BigInt;
using exact::BigRational;
using exact::IntPoly;
using exact::LaurentPoly;
using exact::RationalFunction;

/// 2-adic valuation of n (written mu(n) in some sources).
inline int nu(std::uint64_t n) {
    if (n == 0) throw std::domain_error("nu(0) is undefined");
    return std::countr_zero(n);
}

/// floor(log2 n) for n >= 1.
inline int floor_log2(std::uint64_t n) {
    if (n == 0) throw std::domain_error("log2(0) is undefined");
    return std::bit_width(n) - 1;
}

/// Memo tables for the Stern polynomials B_n(t), the Stern numbers s(n),
/// the degrees e(n) and the orders d(n).
///
/// Small indices live in dense tables (grown on demand, stable references);
/// large ones fall back to sparse memoization. Not internally synchronized:
/// one writer at a time, or warm it up before sharing it read-only.
class SternCache {
public:
    static constexpr std::uint64_t kDensePolyLimit = std::uint64_t{1} << 16;
    static constexpr std::uint64_t kDenseIntLimit = std::uint64_t{1} << 24;

    SternCache() {
        polys_.emplace_back();                    // B_0 = 0
        polys_.push_back(IntPoly::constant(1));   // B_1 = 1
        degrees_ = {-1, 0};                       // e(0) undefined
        numbers_ = {0, 1};
    }

    const IntPoly& poly(std::uint64_t n) {
        if (n < polys_.size()) return polys_[n];
        if (n <= kDensePolyLimit) {
            while (polys_.size() <= n) {
                const std::size_t m = polys_.size();
                if (m % 2 == 0)
                    polys_.push_back(polys_[m / 2].shifted(1));
                else
                    polys_.push_back(polys_[(m - 1) / 2] + polys_[(m + 1) / 2]);
            }
            return polys_[n];
        }
        if (auto it = sparse_polys_.find(n); it != sparse_polys_.end()) return it->second;
        IntPoly p = (n % 2 == 0) ? poly(n / 2).shifted(1) : poly((n - 1) / 2) + poly((n + 1) / 2);
        return sparse_polys_.emplace(n, std::move(p)).first->second;
    }

    /// e(n) from the three-branch integer recurrence; never builds B_n.
    int degree(std::uint64_t n) {
        if (n == 0) throw std::domain_error("degree of B_0 = 0 is undefined");
        if (n < degrees_.size()) return degrees_[n];
        if (n <= kDenseIntLimit) {
            fill_degrees(n);
            return degrees_[n];
        }
        if (n % 2 == 0) return degree(n / 2) + 1;
        if (n % 4 == 1) return degree((n - 1) / 4) + 1;
        return degree((n + 1) / 4) + 1;
    }

    /// Dense e(1..n) table, filled up to at least n.
    const std::vector<int>& degrees_up_to(std::uint64_t n) {
        if (n > kDenseIntLimit) throw std::length_error("dense degree table limit exceeded");
        fill_degrees(n);
        return degrees_;
    }

    /// Multiplicity of the root t = 0 of B_n(t), read off the polynomial.
    int order(std::uint64_t n) {
        if (n == 0) throw std::domain_error("order of B_0 = 0 is undefined");
        if (auto it = orders_.find(n); it != orders_.end()) return it->second;
        const int d = static_cast<int>(poly(n).valuation());
        orders_.emplace(n, d);
        return d;
    }

    /// Dense d(1..n) from d(2m) = d(m) + 1, d(2m+1) = min(d(m), d(m+1)), which
    /// follows from the definition of B_n alone (nonnegative coefficients).
    const std::vector<int>& orders_up_to(std::uint64_t n) {
        if (n > kDenseIntLimit) throw std::length_error("dense order table limit exceeded");
        if (order_table_.empty()) order_table_ = {-1, 0};
        while (order_table_.size() <= n) {
            const std::size_t m = order_table_.size();
            order_table_.push_back(m % 2 == 0 ? order_table_[m / 2] + 1
                                              : std::min(order_table_[(m - 1) / 2], order_table_[(m + 1) / 2]));
        }
        return order_table_;
    }

    /// s(n) = B_n(1).
    BigInt number(std::uint64_t n) {
        if (n < numbers_.size()) return BigInt(static_cast<unsigned long>(numbers_[n]));
        if (n <= kDenseIntLimit) {
            while (numbers_.size() <= n) {
                const std::size_t m = numbers_.size();
                numbers_.push_back(m % 2 == 0 ? numbers_[m / 2] : numbers_[(m - 1) / 2] + numbers_[(m + 1) / 2]);
            }
            return BigInt(static_cast<unsigned long>(numbers_[n]));
        }
        // (a, b) tracks s(m) and s(m + 1) while reading n from the top bit down.
        BigInt a = 0, b = 1;
        for (int bit = floor_log2(n); bit >= 0; --bit) {
            if ((n >> bit) & 1u)
                a += b;
            else
                b += a;
        }
        return a;
    }

private:
    void fill_degrees(std::uint64_t n) {
        if (degrees_.size() > n) return;
        degrees_.reserve(static_cast<std::size_t>(n + 1));
        while (degrees_.size() <= n) {
            const std::uint64_t m = degrees_.size();
            int v;
            if (m == 2)
                v = 1;
            else if (m % 2 == 0)
                v = degrees_[m / 2] + 1;
            else if (m % 4 == 1)
                v = degrees_[(m - 1) / 4] + 1;
            else
                v = degrees_[(m + 1) / 4] + 1;
            degrees_.push_back(v);
        }
    }

    std::deque<IntPoly> polys_;
    std::unordered_map<std::uint64_t, IntPoly> sparse_polys_;
    std::vector<int> degrees_;
    std::unordered_map<std::uint64_t, int> orders_;
    std::vector<int> order_table_;
    std::vector<std::uint64_t> numbers_;
};

inline const IntPoly& stern_poly(std::uint64_t n, SternCache& cache) { return cache.poly(n); }
inline BigInt stern_number(std::uint64_t n, SternCache& cache) { return cache.number(n); }
inline int degree_e(std::uint64_t n, SternCache& cache) { return cache.degree(n); }
inline int order_d(std::uint64_t n, SternCache& cache) { return cache.order(n); }

/// 1 + t + ... + t^{n-1} for sign = -1, plus t for sign = +1; equals B_{2^n + sign}.
inline IntPoly closed_form_pow2(unsigned n, int sign) {
    if (n == 0) throw std::domain_error("closed_form_pow2 needs n >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    IntPoly p(std::vector<BigInt>(n, BigInt(1)));
    if (sign == 1) p += IntPoly::x();
    return p;
}

/// A_n(t) = t^{-mu} (2 (1 + t + ... + t^{mu-1}) + t) with mu = nu(n).
inline LaurentPoly a_coefficient(std::uint64_t n) {
    const int mu = nu(n);
    std::vector<BigInt> cs(static_cast<std::size_t>(std::max(mu, 2)), BigInt(0));
    for (int i = 0; i < mu; ++i) cs[static_cast<std::size_t>(i)] = 2;
    cs[1] += 1;
    return {IntPoly(std::move(cs)), -mu};
}

/// B_{n+1} = A_n B_n - B_{n-1}, compared after multiplying through by t^{nu(n)}.
inline bool three_term_check(std::uint64_t n, SternCache& cache) {
    if (n == 0) throw std::domain_error("three_term_check needs n >= 1");
    const auto mu = static_cast<std::size_t>(nu(n));
    const IntPoly lhs = a_coefficient(n).times_power(static_cast<long>(mu)) * cache.poly(n);
    const IntPoly rhs = (cache.poly(n + 1) + cache.poly(n - 1)).shifted(mu);
    return lhs == rhs;
}

/// t^{mu}(B_{n+1} + B_{n-1}) = (B_{2^mu + 1} + B_{2^mu - 1}) B_n with mu = nu(n).
inline bool valuation_identity_check(std::uint64_t n, SternCache& cache) {
    const auto mu = static_cast<unsigned>(nu(n));
    const std::uint64_t p = std::uint64_t{1} << mu;
    const IntPoly lhs = (cache.poly(n + 1) + cache.poly(n - 1)).shifted(mu);
    const IntPoly rhs = (cache.poly(p + 1) + cache.poly(p - 1)) * cache.poly(n);
    return lhs == rhs;
}

/// The unit upper-triangular coefficient matrix of the linear system whose
/// unknowns are B_n, B_{n-1}, ..., B_1 (in that column order).
inline exact::RationalMatrix stern_system_matrix(std::uint64_t n) {
    if (n < 2) throw std::domain_error("stern_system_matrix needs n >= 2");
    const std::size_t dim = static_cast<std::size_t>(n);
    exact::RationalMatrix m(dim, std::vector<RationalFunction>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        const std::uint64_t eq = n - r;  // row r encodes the relation for B_eq
        m[r][r] = 1;
        if (eq >= 2) m[r][r + 1] = -RationalFunction(a_coefficient(eq - 1));
        if (eq >= 4) m[r][r + 2] = 1;  // for eq = 3 the B_1 term sits in the constants
    }
    return m;
}

/// Constant column of that system: -1 for the B_3 row, 0 for B_2, 1 for B_1.
inline std::vector<RationalFunction> stern_system_constants(std::uint64_t n) {
    const std::size_t dim = static_cast<std::size_t>(n);
    std::vector<RationalFunction> c(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::uint64_t eq = n - r;
        if (eq == 3) c[r] = -1;
        if (eq == 1) c[r] = 1;
    }
    return c;
}

/// B_n(t) by Cramer's rule: the system matrix with its first column replaced
/// by the constants. The system determinant is 1.
inline RationalFunction stern_poly_determinant(std::uint64_t n) {
    if (n < 2) throw std::domain_error("stern_poly_determinant needs n >= 2");
    exact::RationalMatrix m = stern_system_matrix(n);
    const auto c = stern_system_constants(n);
    for (std::size_t r = 0; r < m.size(); ++r) m[r][0] = c[r];
    return exact::ratfunc_matrix_determinant(std::move(m));
}

/// Some n with d(n) = p and e(n) = q.
inline std::uint64_t phi_preimage(unsigned p, unsigned q) {
    if (p > q) throw std::domain_error("phi_preimage: no n has d(n) > e(n)");
    if (q >= 62) throw std::overflow_error("phi_preimage: witness exceeds 64 bits");
    if (p == q) return std::uint64_t{1} << p;
    return (std::uint64_t{1} << p) * ((std::uint64_t{1} << (q - p + 1)) + 1);
}

}  // namespace stern
