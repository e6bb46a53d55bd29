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
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored lowest degree first and trailing zeros are trimmed,
 * so the representation is canonical. The zero polynomial has degree -1.
 */

#ifndef MONOGAUGE_UNIPOLY_HPP
#define MONOGAUGE_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace monogauge {

class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return constant(1); }

    /* t^j - 1 */
    static UniPoly t_pow_minus_one(long j) {
        if (j < 1) throw OutOfRange("t_pow_minus_one requires j >= 1");
        std::vector<Rational> c(static_cast<std::size_t>(j) + 1, Rational(0));
        c[0] = -1;
        c[static_cast<std::size_t>(j)] = 1;
        return UniPoly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(long i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const {
        if (c_.empty()) throw DivisionByZero("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly operator-() const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x = -x;
        return UniPoly(std::move(c));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return UniPoly(std::move(c));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        }
        return UniPoly(std::move(c));
    }

    UniPoly operator*(const Rational& a) const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= a;
        return UniPoly(std::move(c));
    }

    UniPoly pow(long e) const {
        if (e < 0) throw OutOfRange("negative polynomial power");
        UniPoly result = one();
        UniPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    /* Euclidean division; the divisor may be any nonzero polynomial. */
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        UniPoly r = *this;
        if (r.degree() < d.degree()) return {UniPoly(), r};
        std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
        const Rational& lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            long shift = r.degree() - d.degree();
            Rational f = r.leading() / lead;
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<Rational> rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rc[i + static_cast<std::size_t>(shift)] -= f * d.c_[i];
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), r};
    }

    /* Division that must leave no remainder. */
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
        return q;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /* Descending powers, e.g. "t^2+t+1" or "t^4-t^2+1". */
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Rational& a = coeff(i);
            if (a == 0) continue;
            bool neg = a < 0;
            Rational mag = neg ? Rational(-a) : a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? "-" : "+";
            bool unit = (mag == 1) && i != 0;
            if (!unit) out += rational_to_string(mag);
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

struct PolyExtGcd {
    UniPoly g; // monic gcd (zero only if both inputs are zero)
    UniPoly u;
    UniPoly v; // u*a + v*b = g
};

inline PolyExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::one(), u1 = UniPoly::zero();
    UniPoly v0 = UniPoly::zero(), v1 = UniPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv;
        u0 = u0 * inv;
        v0 = v0 * inv;
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

/* Cyclotomic polynomial Phi_n, by exact division of t^n - 1 by the
   Phi_d with d a proper divisor of n. Memoized per thread; map nodes keep
   returned references stable. */
inline const UniPoly& cyclotomic_poly(long n) {
    if (n < 1) throw OutOfRange("cyclotomic index must be >= 1");
    thread_local std::map<long, UniPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    UniPoly quotient = UniPoly::t_pow_minus_one(n);
    for (long d : divisors_of(n)) {
        if (d == n) continue;
        quotient = quotient.exact_div(cyclotomic_poly(d));
    }
    return cache.emplace(n, std::move(quotient)).first->second;
}

} // namespace monogauge

#endif
