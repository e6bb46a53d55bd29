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
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_m).
 *
 * An element is stored by its coordinates in the power basis
 * 1, z, ..., z^(phi(m)-1) modulo Phi_m, where z denotes a fixed primitive
 * m-th root of unity. Because Phi_m is the minimal polynomial, the
 * representation is canonical: an element is zero iff every coordinate is
 * zero, and equality is coordinate-wise.
 *
 * The text syntax is a sum of terms in the symbol z, e.g. "1 - z^2" or
 * "1/2+3/4z^3"; parse() and to_string() round-trip bit-exactly.
 */

#ifndef MONOGAUGE_CYCLOTOMIC_HPP
#define MONOGAUGE_CYCLOTOMIC_HPP

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace monogauge {

namespace detail {

/* Coefficients of Phi_m, cached per thread for lock-free hot paths. */
inline const std::vector<Rational>& phi_coeffs(long m) {
    thread_local std::map<long, std::vector<Rational>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    return cache.emplace(m, cyclotomic_poly(m).coeffs()).first->second;
}

} // namespace detail

class CycloElement {
public:
    explicit CycloElement(long order) : order_(check_order(order)), c_(degree_of(order), Rational(0)) {}

    CycloElement(long order, std::vector<Rational> coords) : order_(check_order(order)), c_(std::move(coords)) {
        if (c_.size() != degree_of(order_))
            throw OutOfRange("coordinate vector length must equal deg Phi_m");
    }

    static CycloElement from_rational(long order, const Rational& a) {
        CycloElement e(order);
        e.c_[0] = a;
        return e;
    }

    /* z^a reduced into the power basis; a may be any integer. */
    static CycloElement zeta_pow(long order, long a) {
        check_order(order);
        long r = a % order;
        if (r < 0) r += order;
        std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
        raw.back() = 1;
        return CycloElement(order, reduce(order, std::move(raw)));
    }

    static CycloElement zeta(long order) { return zeta_pow(order, 1); }

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw NonIntegral("element is not rational");
        return c_[0];
    }

    bool operator==(const CycloElement& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const CycloElement& o) const { return !(*this == o); }

    /* Total order for use as container keys: order first, then coordinates. */
    bool operator<(const CycloElement& o) const {
        if (order_ != o.order_) return order_ < o.order_;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

    CycloElement operator-() const {
        CycloElement r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    CycloElement operator+(const CycloElement& o) const {
        check_same(o);
        CycloElement r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    CycloElement operator-(const CycloElement& o) const {
        check_same(o);
        CycloElement r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }

    CycloElement operator*(const CycloElement& o) const {
        check_same(o);
        const std::size_t n = c_.size();
        std::vector<Rational> raw(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.c_[j] == 0) continue;
                raw[i + j] += c_[i] * o.c_[j];
            }
        }
        return CycloElement(order_, reduce(order_, std::move(raw)));
    }

    CycloElement operator*(const Rational& a) const {
        CycloElement r = *this;
        for (auto& x : r.c_) x *= a;
        return r;
    }

    /* Multiplicative inverse via the extended Euclidean algorithm against
       Phi_m; exists for every nonzero element since Phi_m is irreducible. */
    CycloElement invert() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_m)");
        UniPoly a{std::vector<Rational>(c_)};
        auto eg = poly_ext_gcd(a, cyclotomic_poly(order_));
        if (eg.g.degree() != 0)
            throw InvariantViolation("gcd with Phi_m is not constant"); // unreachable for valid state
        std::vector<Rational> raw = eg.u.coeffs();
        return CycloElement(order_, reduce(order_, std::move(raw)));
    }

    CycloElement operator/(const CycloElement& o) const { return *this * o.invert(); }

    std::string to_string() const { return format(true); }
    std::string to_string_compact() const { return format(false); }

    /* Parses the z-expression syntax; coefficients may be integers or
       integer fractions, exponents are reduced modulo the order. */
    static CycloElement parse(long order, std::string_view s) {
        check_order(order);
        CycloElement acc(order);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        };
        auto fail = [&](const std::string& what) -> ParseError {
            return ParseError(what, 1, pos + 1);
        };
        skip_ws();
        if (pos == s.size()) throw fail("empty field-element expression");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
                skip_ws();
            } else if (!first) {
                if (pos == s.size()) break;
                throw fail("expected '+' or '-' between terms");
            }
            bool have_coef = false;
            Rational coef(1);
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                have_coef = true;
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                std::string numerator(s.substr(start, pos - start));
                std::string denominator = "1";
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    std::size_t dstart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == dstart) throw fail("expected digits after '/'");
                    denominator = std::string(s.substr(dstart, pos - dstart));
                    if (Rational(denominator) == 0) throw fail("zero denominator");
                }
                coef = Rational(numerator) / Rational(denominator);
                skip_ws();
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    skip_ws();
                    if (pos == s.size() || s[pos] != 'z') throw fail("expected 'z' after '*'");
                }
            }
            long expo = 0;
            if (pos < s.size() && s[pos] == 'z') {
                ++pos;
                expo = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    bool eneg = false;
                    if (pos < s.size() && s[pos] == '-') {
                        eneg = true;
                        ++pos;
                    }
                    std::size_t estart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == estart) throw fail("expected exponent digits after '^'");
                    try {
                        expo = std::stol(std::string(s.substr(estart, pos - estart)));
                    } catch (const std::exception&) {
                        throw fail("exponent out of range");
                    }
                    if (eneg) expo = -expo;
                }
            } else if (!have_coef) {
                throw fail("expected a coefficient or 'z'");
            }
            CycloElement term = zeta_pow(order, expo) * (coef * sign);
            acc = acc + term;
            first = false;
            skip_ws();
            if (pos == s.size()) break;
            if (s[pos] != '+' && s[pos] != '-') throw fail("unexpected character in field element");
        }
        return acc;
    }

private:
    long order_;
    std::vector<Rational> c_;

    static long check_order(long m) {
        if (m < 1) throw OutOfRange("cyclotomic order must be >= 1");
        return m;
    }

    static std::size_t degree_of(long m) { return static_cast<std::size_t>(euler_phi(m)); }

    void check_same(const CycloElement& o) const {
        if (order_ != o.order_)
            throw OrderMismatch("mixed cyclotomic orders " + std::to_string(order_) + " and " +
                                std::to_string(o.order_));
    }

    /* Reduce a raw coefficient vector modulo Phi_m to length phi(m). */
    static std::vector<Rational> reduce(long m, std::vector<Rational> raw) {
        const std::vector<Rational>& phi = detail::phi_coeffs(m);
        const std::size_t deg = phi.size() - 1; // Phi_m is monic of degree phi(m)
        for (std::size_t i = raw.size(); i-- > deg;) {
            const Rational f = raw[i];
            if (f == 0) continue;
            raw[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= f * phi[j];
        }
        raw.resize(deg, Rational(0));
        return raw;
    }

    std::string format(bool spaced) const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            Rational mag = neg ? Rational(-a) : a;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+");
            }
            bool unit = (mag == 1) && i != 0;
            if (!unit) out += rational_to_string(mag);
            if (i >= 1) out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
};

inline CycloElement operator*(const Rational& a, const CycloElement& e) { return e * a; }

} // namespace monogauge

#endif
