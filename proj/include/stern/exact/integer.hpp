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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace stern::exact {

// GMP keeps mpq_class canonical (gcd 1, positive denominator, zero as 0/1)
// as long as every constructor path goes through canonicalize().
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigRational pow(const BigRational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return pow(BigRational(1) / base, -exp);
    }
    BigRational r(pow(base.get_num(), static_cast<unsigned long>(exp)),
                  pow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

inline BigInt pow2(unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Square root of a nonnegative rational when it is itself rational.
inline std::optional<BigRational> rational_sqrt(const BigRational& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return std::nullopt;
    BigInt a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(a, b);
}

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace stern::exact
