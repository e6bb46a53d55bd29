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
 * @file factored_poly.hpp
 * @brief Polynomials kept in factored form.
 *
 * Factors are either irreducible cyclotomics Phi_n (tagged with their index)
 * or the composite convenience factor t^j - 1; arbitrary monic polynomials
 * are accepted too. The stored presentation is preserved for printing;
 * comparison and degree always go through the expanded or normalized form,
 * so different presentations of the same polynomial compare equal.
 */

#ifndef MONOGAUGE_FACTORED_POLY_HPP
#define MONOGAUGE_FACTORED_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace monogauge {

struct Factor {
    UniPoly poly;
    long mult = 1;
    long cyclo_index = 0; // n > 0 when poly == Phi_n
    long power_index = 0; // j > 0 when poly == t^j - 1
};

/* Tries to recognize a monic polynomial as some Phi_n. Degrees determine a
   finite search window since phi(n) >= sqrt(n/2). Returns 0 if none. */
inline long recognize_cyclotomic(const UniPoly& p) {
    long d = p.degree();
    if (d < 1) return 0;
    long bound = 2 * d * d + 1;
    for (long n = 1; n <= bound; ++n) {
        if (euler_phi(n) != d) continue;
        if (cyclotomic_poly(n) == p) return n;
    }
    return 0;
}

class FactoredPoly {
public:
    FactoredPoly() = default;

    static FactoredPoly one() { return FactoredPoly(); }

    static FactoredPoly from_cyclotomic(const std::vector<std::pair<long, long>>& indexed) {
        FactoredPoly f;
        for (auto [n, mult] : indexed) f.push_cyclotomic(n, mult);
        return f;
    }

    void push_cyclotomic(long n, long mult) {
        check_mult(mult);
        if (mult == 0) return;
        factors_.push_back({cyclotomic_poly(n), mult, n, n == 1 ? 1 : 0});
    }

    /* t^j - 1, kept composite in the presentation. */
    void push_pow_minus_one(long j, long mult) {
        check_mult(mult);
        if (mult == 0) return;
        factors_.push_back({UniPoly::t_pow_minus_one(j), mult, j == 1 ? 1 : 0, j});
    }

    void push(const UniPoly& p, long mult) {
        check_mult(mult);
        if (mult == 0) return;
        if (p.is_zero()) throw OutOfRange("zero polynomial cannot be a factor");
        Factor f{p, mult, 0, 0};
        f.cyclo_index = recognize_cyclotomic(p);
        factors_.push_back(std::move(f));
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }

    long degree() const {
        long d = 0;
        for (const auto& f : factors_) d += f.poly.degree() * f.mult;
        return d;
    }

    UniPoly expand() const {
        UniPoly out = UniPoly::one();
        for (const auto& f : factors_) out = out * f.poly.pow(f.mult);
        return out;
    }

    /* Multiplicity map keyed by cyclotomic index; composite t^j - 1 factors
       contribute to every Phi_e with e | j. Throws Unsupported if some factor
       is not a product of cyclotomics. */
    std::map<long, long> cyclotomic_multiplicities() const {
        std::map<long, long> out;
        for (const auto& f : factors_) {
            if (f.power_index > 0) {
                for (long e : divisors_of(f.power_index)) out[e] += f.mult;
            } else if (f.cyclo_index > 0) {
                out[f.cyclo_index] += f.mult;
            } else {
                throw Unsupported("factor '" + f.poly.to_string() + "' is not cyclotomic");
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second == 0)
                it = out.erase(it);
            else
                ++it;
        }
        return out;
    }

    long multiplicity_of_cyclotomic(long n) const {
        auto m = cyclotomic_multiplicities();
        auto it = m.find(n);
        return it == m.end() ? 0 : it->second;
    }

    /* Canonical comparison expands both sides. */
    bool operator==(const FactoredPoly& o) const { return expand() == o.expand(); }
    bool operator!=(const FactoredPoly& o) const { return !(*this == o); }

    /* Presentation-preserving text, e.g. "(t-1)^14 (t^2+t+1)^1". */
    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& f : factors_) {
            if (!out.empty()) out += " ";
            out += "(" + f.poly.to_string() + ")^" + std::to_string(f.mult);
        }
        return out;
    }

private:
    std::vector<Factor> factors_;

    static void check_mult(long mult) {
        if (mult < 0) throw OutOfRange("factor multiplicity must be >= 0");
    }
};

} // namespace monogauge

#endif
