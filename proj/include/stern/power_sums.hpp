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

// S_k(n) = sum of i^k over the i with e(i) = n, and G_k(x) = sum_n S_k(n) x^n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stern/core.hpp"
#include "stern/errors.hpp"

namespace stern {

using exact::RatPoly;

/// T_j = 2^j (2^{j+1} + 1), the reciprocal poles of the G_k.
inline BigInt pole_base(unsigned j) { return exact::pow2(j) * (exact::pow2(j + 1) + 1); }

/// Memo of G_0, G_1, ... built bottom-up by the recurrence
/// G_k = (x sum_{j<k} C(k,j)(4^j + (-1)^k (-4)^j) G_j + 1) / (1 - T_k x).
class GkTable {
public:
    const RationalFunction& get(unsigned k) {
        while (entries_.size() <= k) extend();
        return entries_[k];
    }

    std::size_t size() const { return entries_.size(); }

private:
    void extend() {
        const unsigned k = static_cast<unsigned>(entries_.size());
        RationalFunction acc;
        for (unsigned j = 0; j < k; ++j) {
            BigInt w = exact::pow(BigInt(4), j);
            BigInt alt = exact::pow(BigInt(-4), j);
            w += (k % 2 == 0) ? alt : BigInt(-alt);
            if (w == 0) continue;
            acc += RationalFunction(BigRational(exact::binomial(k, j) * w)) * entries_[j];
        }
        const RationalFunction x(RatPoly::x());
        const RationalFunction den(RatPoly({1, BigRational(-pole_base(k))}));
        entries_.push_back((x * acc + RationalFunction(1)) / den);
    }

    std::vector<RationalFunction> entries_;
};

inline RationalFunction gk_ratfunc(unsigned k, GkTable& table) { return table.get(k); }

/// Coefficient of x^n in G_k.
inline BigInt sk_value(unsigned k, unsigned n, GkTable& table) {
    const auto s = exact::series_expand(table.get(k), n + 1);
    const BigRational& c = s[n];
    if (!exact::is_integer(c)) throw formula_discrepancy("S_k(n) coefficient is not an integer: " + c.get_str());
    return c.get_num();
}

/// Sum of i^k over i in [2^n, (4^{n+1}-1)/3] with e(i) = n.
inline BigInt sk_brute(unsigned k, unsigned n, SternCache& cache, unsigned cap = 8) {
    require_cap("sk_brute n", n, cap);
    const std::uint64_t lo = std::uint64_t{1} << n;
    const std::uint64_t hi = ((std::uint64_t{1} << (2 * n + 2)) - 1) / 3;
    const auto& e = cache.degrees_up_to(hi);
    BigInt sum = 0;
    for (std::uint64_t i = lo; i <= hi; ++i)
        if (e[i] == static_cast<int>(n)) sum += exact::pow(BigInt(static_cast<unsigned long>(i)), k);
    return sum;
}

/// S_1(n) = 10^n, S_2(n) = (35 36^n - 2 3^n)/33, S_3(n) = (25 136^n - 4 10^n)/21.
inline BigInt sk_closed(unsigned k, unsigned n) {
    BigInt num, den;
    switch (k) {
        case 1: return exact::pow(BigInt(10), n);
        case 2:
            num = 35 * exact::pow(BigInt(36), n) - 2 * exact::pow(BigInt(3), n);
            den = 33;
            break;
        case 3:
            num = 25 * exact::pow(BigInt(136), n) - 4 * exact::pow(BigInt(10), n);
            den = 21;
            break;
        default: throw std::domain_error("sk_closed is only given for k = 1, 2, 3");
    }
    if (num % den != 0) throw formula_discrepancy("closed form for S_" + std::to_string(k) + " is not an integer");
    return num / den;
}

/// Product of (1 - T_j x) over j <= k with j = k (mod 2).
inline RatPoly parity_pole_product(unsigned k) {
    RatPoly p({1});
    for (unsigned j = k % 2; j <= k; j += 2) p = p * RatPoly({1, BigRational(-pole_base(j))});
    return p;
}

/// True iff the reduced denominator of G_k divides the parity pole product.
inline bool parity_structure_check(unsigned k, GkTable& table, unsigned cap = 12) {
    require_cap("parity_structure_check k", k, cap);
    return exact::divides(table.get(k).denominator(), parity_pole_product(k));
}

struct AlphaTerm {
    BigInt pole;  // T
    BigRational alpha;
    friend bool operator==(const AlphaTerm&, const AlphaTerm&) = default;
};

/// G_k = sum alpha / (1 - T x), largest T first. Requires a proper fraction
/// whose poles are simple and lie among the 1/T_j with j <= k of k's parity.
inline std::vector<AlphaTerm> alpha_decomposition(unsigned k, GkTable& table) {
    const RationalFunction& g = table.get(k);
    const RatPoly& num = g.numerator();
    const RatPoly& den = g.denominator();
    if (num.degree() >= den.degree()) throw formula_discrepancy("G_k is not a proper fraction");
    const RatPoly dprime = exact::derivative(den);
    std::vector<AlphaTerm> out;
    for (unsigned j = k % 2; j <= k; j += 2) {
        const BigRational at = exact::make_rational(BigInt(1), pole_base(j));
        if (den.evaluate<BigRational>(at) != 0) continue;
        const BigRational slope = dprime.evaluate<BigRational>(at);
        if (slope == 0) throw formula_discrepancy("G_" + std::to_string(k) + " has a repeated pole at 1/" + pole_base(j).get_str());
        const BigRational residue = num.evaluate<BigRational>(at) / slope;
        out.push_back({pole_base(j), -residue * BigRational(pole_base(j))});
    }
    if (static_cast<long>(out.size()) != den.degree())
        throw formula_discrepancy("G_" + std::to_string(k) + " has poles outside the parity class");
    std::sort(out.begin(), out.end(), [](const AlphaTerm& a, const AlphaTerm& b) { return a.pole > b.pole; });
    return out;
}

/// sum alpha T^n over a decomposition.
inline BigRational alpha_predict(const std::vector<AlphaTerm>& terms, unsigned n) {
    BigRational s = 0;
    for (const auto& t : terms) s += t.alpha * BigRational(exact::pow(t.pole, n));
    return s;
}

}  // namespace stern
