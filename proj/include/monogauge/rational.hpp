/*
   Copyright 2026 The Monogauge Authors

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

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals used throughout the library.
 *
 * Rational values are always held in lowest terms with a positive denominator
 * (boost::multiprecision::cpp_rational canonicalizes on every operation), so
 * equality of values is equality of representations.
 */

#ifndef MONOGAUGE_RATIONAL_HPP
#define MONOGAUGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace monogauge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/* "p" when integral, "p/q" otherwise; parses back with parse_rational. */
inline std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(std::string_view s) {
    try {
        return Rational(std::string(s));
    } catch (const std::exception&) {
        throw ParseError("invalid rational literal '" + std::string(s) + "'", 1, 1);
    }
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at each step
    }
    return result;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

/* Euler totient by trial-division factorization; orders here are small. */
inline long euler_phi(long n) {
    if (n <= 0) throw OutOfRange("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

/* Multiplicative order of the root exp(2*pi*i*s/n), i.e. n / gcd(s, n). */
inline long root_order(long s, long n) {
    long r = s % n;
    if (r < 0) r += n;
    if (r == 0) return 1;
    return n / std::gcd(r, n);
}

} // namespace monogauge

#endif
