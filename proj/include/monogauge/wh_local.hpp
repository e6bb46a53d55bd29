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
 * @file wh_local.hpp
 * @brief Local data of weighted homogeneous plane curve singularities.
 *
 * A germ g of weighted homogeneous type (w_1,...,w_n; e) is suspended by a
 * global degree d into the type (d1*w_1,...,d1*w_n, e1; lcm(e,d)) with
 * gamma = gcd(e,d), d1 = d/gamma, e1 = e/gamma. For each character index k,
 * the space A_k is spanned by the monomials in the first n suspension
 * variables of weighted degree
 *
 *     D_k = lcm(e,d) - d1*(w_1+...+w_n) - e1*k,
 *
 * and the jet order a(g,k) is the least s >= 0 with s*d1*w_j > D_k for all
 * j. Whether k contributes is decided by A_k being nonempty (monomial
 * enumeration), not by a(g,k) > 0: a positive jet order with no monomial of
 * degree D_k still contributes nothing.
 */

#ifndef MONOGAUGE_WH_LOCAL_HPP
#define MONOGAUGE_WH_LOCAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "factored_poly.hpp"
#include "rational.hpp"

namespace monogauge {

struct WHType {
    std::vector<long> weights;
    long degree = 0;

    long weight_sum() const {
        long s = 0;
        for (long w : weights) s += w;
        return s;
    }

    long min_weight() const {
        if (weights.empty()) throw OutOfRange("weighted homogeneous type needs at least one weight");
        return *std::min_element(weights.begin(), weights.end());
    }

    void validate() const {
        if (weights.empty()) throw OutOfRange("weighted homogeneous type needs at least one weight");
        if (degree < 1) throw OutOfRange("weighted homogeneous degree must be >= 1");
        for (long w : weights)
            if (w < 1) throw OutOfRange("weights must be >= 1");
    }
};

/* An ordinary point of multiplicity m; locally x^m + y^m up to higher
   order, of type (1,1;m). */
struct OrdinaryMultiple {
    long m = 2;
};

/* x^a + y^b. */
struct BrieskornPoint {
    long a = 2;
    long b = 2;
};

struct GeneralWH {
    WHType type;
};

using SingularityKind = std::variant<OrdinaryMultiple, BrieskornPoint, GeneralWH>;

inline WHType wh_type(const SingularityKind& kind) {
    if (const auto* o = std::get_if<OrdinaryMultiple>(&kind)) {
        if (o->m < 2) throw OutOfRange("ordinary multiple point needs m >= 2");
        return WHType{{1, 1}, o->m};
    }
    if (const auto* b = std::get_if<BrieskornPoint>(&kind)) {
        if (b->a < 2 || b->b < 2) throw OutOfRange("Brieskorn exponents must be >= 2");
        long l = lcm_long(b->a, b->b);
        return WHType{{l / b->a, l / b->b}, l};
    }
    const auto& g = std::get<GeneralWH>(kind).type;
    g.validate();
    return g;
}

inline std::string kind_name(const SingularityKind& kind) {
    if (const auto* o = std::get_if<OrdinaryMultiple>(&kind)) return "ordinary(" + std::to_string(o->m) + ")";
    if (const auto* b = std::get_if<BrieskornPoint>(&kind))
        return "brieskorn(" + std::to_string(b->a) + "," + std::to_string(b->b) + ")";
    const auto& t = std::get<GeneralWH>(kind).type;
    std::string s = "wh(";
    for (std::size_t i = 0; i < t.weights.size(); ++i) s += (i ? "," : "") + std::to_string(t.weights[i]);
    return s + ";" + std::to_string(t.degree) + ")";
}

/* Multiplicity of the corresponding plane curve point; for an ordinary
   point this is m, for x^a + y^b it is min(a,b). */
inline long kind_multiplicity(const SingularityKind& kind) {
    if (const auto* o = std::get_if<OrdinaryMultiple>(&kind)) return o->m;
    if (const auto* b = std::get_if<BrieskornPoint>(&kind)) return std::min(b->a, b->b);
    throw Unsupported("no multiplicity rule for a general weighted homogeneous kind");
}

inline std::pair<long, long> gamma_mu(long e, long d) {
    if (e < 1 || d < 1) throw OutOfRange("gamma_mu requires positive arguments");
    return {gcd_long(e, d), lcm_long(e, d)};
}

struct SuspensionData {
    WHType type; // weights (d1*w_1,...,d1*w_n, e1), degree lcm(e,d)
    long gamma = 1;
    long d1 = 1;
    long e1 = 1;
    long mu = 1;
};

inline SuspensionData suspension_type(const WHType& g, long d) {
    g.validate();
    if (d < 1) throw OutOfRange("suspension degree must be >= 1");
    auto [gamma, mu] = gamma_mu(g.degree, d);
    long d1 = d / gamma;
    long e1 = g.degree / gamma;
    WHType t;
    for (long w : g.weights) t.weights.push_back(d1 * w);
    t.weights.push_back(e1);
    t.degree = mu;
    return {std::move(t), gamma, d1, e1, mu};
}

namespace detail {

inline void enumerate_weighted(const std::vector<long>& weights, long target, std::size_t pos,
                               std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (pos + 1 == weights.size()) {
        if (target % weights[pos] == 0) {
            current.push_back(target / weights[pos]);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    for (long a = target / weights[pos]; a >= 0; --a) {
        current.push_back(a);
        enumerate_weighted(weights, target - a * weights[pos], pos + 1, current, out);
        current.pop_back();
    }
}

inline bool any_weighted(const std::vector<long>& weights, long target, std::size_t pos) {
    if (target < 0) return false;
    if (pos + 1 == weights.size()) return target % weights[pos] == 0;
    for (long a = target / weights[pos]; a >= 0; --a)
        if (any_weighted(weights, target - a * weights[pos], pos + 1)) return true;
    return false;
}

} // namespace detail

/* All exponent vectors alpha >= 0 with sum alpha_j * w_j = target, in
   lexicographic order with the first exponent largest first. */
inline std::vector<std::vector<long>> weighted_monomials(const std::vector<long>& weights, long target) {
    for (long w : weights)
        if (w < 1) throw OutOfRange("weights must be >= 1");
    if (weights.empty()) throw OutOfRange("weighted enumeration needs at least one weight");
    std::vector<std::vector<long>> out;
    if (target < 0) return out;
    std::vector<long> current;
    detail::enumerate_weighted(weights, target, 0, current, out);
    return out;
}

inline bool has_weighted_monomial(const std::vector<long>& weights, long target) {
    if (weights.empty()) throw OutOfRange("weighted enumeration needs at least one weight");
    return detail::any_weighted(weights, target, 0);
}

/* Least s in {0,1,2,...} with s*w_j > degree - weight_sum for all j. */
inline long a_absolute(const WHType& g) {
    g.validate();
    long excess = g.degree - g.weight_sum();
    if (excess < 0) return 0;
    return excess / g.min_weight() + 1;
}

/* Weighted degree of the A_k monomial space in the suspension. */
inline long a_k_degree(const WHType& g, long d, long k) {
    SuspensionData s = suspension_type(g, d);
    return s.mu - s.d1 * g.weight_sum() - s.e1 * k;
}

/* Least s in {0,1,2,...} with s*d1*w_j > D_k for all j; 0 when D_k < 0. */
inline long a_suspension(const WHType& g, long d, long k) {
    SuspensionData s = suspension_type(g, d);
    long D = s.mu - s.d1 * g.weight_sum() - s.e1 * k;
    if (D < 0) return 0;
    long step = s.d1 * g.min_weight();
    return D / step + 1;
}

/* Basis monomials of A_k (exponents in the first n suspension variables). */
inline std::vector<std::vector<long>> a_k_monomials(const WHType& g, long d, long k) {
    SuspensionData s = suspension_type(g, d);
    std::vector<long> w(s.type.weights.begin(), s.type.weights.end() - 1);
    return weighted_monomials(w, a_k_degree(g, d, k));
}

/* The k in [1, d] whose A_k is nonempty, decided by direct enumeration. */
inline std::set<long> nontrivial_k(const WHType& g, long d) {
    SuspensionData s = suspension_type(g, d);
    std::vector<long> w(s.type.weights.begin(), s.type.weights.end() - 1);
    std::set<long> out;
    for (long k = 1; k <= d; ++k) {
        long D = s.mu - s.d1 * g.weight_sum() - s.e1 * k;
        if (D < 0) break; // strictly decreasing in k
        if (detail::any_weighted(w, D, 0)) out.insert(k);
    }
    return out;
}

/* Product formula prod (e - w_j) / w_j; must come out integral. */
inline BigInt milnor_number(const WHType& g) {
    g.validate();
    Rational mu(1);
    for (long w : g.weights) mu *= Rational(g.degree - w) / Rational(w);
    if (!is_integer(mu)) throw NonIntegral("Milnor number " + rational_to_string(mu) + " is not an integer");
    if (mu < 0) throw OutOfRange("negative Milnor number");
    return num(mu);
}

struct LocalMonodromy {
    FactoredPoly alexander;
    std::set<long> eigenvalue_orders;
};

/* Local Alexander polynomial of the first Milnor monodromy.

   For x^a + y^b the eigenvalue multiset is
       { zeta_a^i zeta_b^j : 1 <= i <= a-1, 1 <= j <= b-1 },
   grouped into cyclotomic factors (the multiset is Galois stable). An
   ordinary m-fold point is x^m + y^m; the product rule is the source of
   truth and equals the closed form (t^m-1)^(m-2) (t-1). General weighted
   homogeneous kinds are not supported. */
inline LocalMonodromy local_alexander(const SingularityKind& kind) {
    if (std::holds_alternative<GeneralWH>(kind))
        throw Unsupported("local Alexander polynomial for a general weighted homogeneous kind");
    long a, b;
    if (const auto* o = std::get_if<OrdinaryMultiple>(&kind)) {
        if (o->m < 2) throw OutOfRange("ordinary multiple point needs m >= 2");
        a = b = o->m;
    } else {
        const auto& bk = std::get<BrieskornPoint>(kind);
        if (bk.a < 2 || bk.b < 2) throw OutOfRange("Brieskorn exponents must be >= 2");
        a = bk.a;
        b = bk.b;
    }
    std::map<long, long> order_counts;
    for (long i = 1; i <= a - 1; ++i) {
        for (long j = 1; j <= b - 1; ++j) {
            // zeta_a^i * zeta_b^j = exp(2 pi i (i*b + j*a) / (a*b))
            long o = root_order(i * b + j * a, a * b);
            ++order_counts[o];
        }
    }
    LocalMonodromy lm;
    for (const auto& [o, count] : order_counts) {
        long deg = euler_phi(o);
        if (count % deg != 0)
            throw InvariantViolation("eigenvalue multiset is not Galois stable"); // unreachable
        lm.alexander.push_cyclotomic(o, count / deg);
        lm.eigenvalue_orders.insert(o);
    }
    return lm;
}

/* Restriction of a coefficient table to the top weighted degree e - sum(w);
   everything of other degrees is dropped. */
inline std::map<std::vector<long>, CycloElement> project_to_basis(
    const std::map<std::vector<long>, CycloElement>& coeffs, const WHType& g) {
    g.validate();
    long target = g.degree - g.weight_sum();
    std::map<std::vector<long>, CycloElement> out;
    for (const auto& [alpha, value] : coeffs) {
        if (alpha.size() != g.weights.size())
            throw OutOfRange("exponent vector length does not match weight count");
        long deg = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < 0) throw OutOfRange("negative exponent");
            deg += alpha[i] * g.weights[i];
        }
        if (deg == target) out.emplace(alpha, value);
    }
    return out;
}

} // namespace monogauge

#endif
