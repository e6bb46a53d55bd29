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
 * @file eval_oracle.hpp
 * @brief Exact-rank certification of jet-evaluation surjectivity.
 *
 * The oracle realizes the evaluation map from degree-N plane forms to direct
 * sums of jets at fat points: row (target i, exponent beta) against column
 * (monomial exponent alpha) holds the Taylor coefficient of y^alpha at the
 * point b_i, which is C(alpha_1, beta_1) C(alpha_2, beta_2)
 * b_1^{alpha_1-beta_1} b_2^{alpha_2-beta_2}. Surjectivity (full row rank)
 * certifies the vanishing the counting bound could not reach; a deficient
 * rank certifies nothing. Ranks are computed by fraction-free elimination
 * over the cyclotomic field and cross-checked against a prime reduction,
 * which can only ever lower the rank.
 */

#ifndef MONOGAUGE_EVAL_ORACLE_HPP
#define MONOGAUGE_EVAL_ORACLE_HPP

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "profile.hpp"
#include "rational.hpp"

namespace monogauge {

struct JetTarget {
    std::array<CycloElement, 2> point;
    long order = 1; // jets modulo m^order: Taylor coefficients of total degree < order
};

/* Dimension of the jet space at one point: C(order + 1, 2) in two variables. */
inline long jet_dim(long order) {
    if (order < 1) throw OutOfRange("jet order must be >= 1");
    return order * (order + 1) / 2;
}

struct EvalMatrix {
    long N = 0;
    long field_order = 1;
    std::vector<std::pair<std::size_t, std::array<long, 2>>> row_tags; // (target index, beta)
    std::vector<std::array<long, 2>> col_tags;                         // monomial exponent alpha
    std::vector<std::vector<CycloElement>> entries;                    // row-major

    std::size_t rows() const { return row_tags.size(); }
    std::size_t cols() const { return col_tags.size(); }
};

namespace detail {

/* Exponent pairs ordered by total degree, first exponent descending. */
inline std::vector<std::array<long, 2>> graded_exponents(long max_total) {
    std::vector<std::array<long, 2>> out;
    for (long t = 0; t <= max_total; ++t)
        for (long i = t; i >= 0; --i) out.push_back({i, t - i});
    return out;
}

inline std::vector<CycloElement> power_table(const CycloElement& b, long up_to) {
    std::vector<CycloElement> pows;
    pows.reserve(static_cast<std::size_t>(up_to) + 1);
    pows.push_back(CycloElement::from_rational(b.order(), 1));
    for (long e = 1; e <= up_to; ++e) pows.push_back(pows.back() * b);
    return pows;
}

} // namespace detail

/* Taylor-coefficient matrix of the degree-N evaluation map. Columns are the
   C(N+2,2) dehomogenized monomials y^alpha with |alpha| <= N; rows are the
   jet coordinates of the targets in input order. */
inline EvalMatrix build_eval_matrix(long N, const std::vector<JetTarget>& targets,
                                    unsigned threads = 1) {
    if (N < 0) throw OutOfRange("evaluation degree must be >= 0");
    EvalMatrix M;
    M.N = N;
    M.field_order = targets.empty() ? 1 : targets[0].point[0].order();
    std::set<std::array<CycloElement, 2>> seen;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const JetTarget& t = targets[i];
        if (t.point[0].order() != M.field_order || t.point[1].order() != M.field_order)
            throw OrderMismatch("all target points must live in one cyclotomic field");
        if (!seen.insert(t.point).second)
            throw DuplicatePoint("repeated target point (" + t.point[0].to_string_compact() + ", " +
                                 t.point[1].to_string_compact() + ")");
        for (const auto& beta : detail::graded_exponents(t.order - 1)) M.row_tags.emplace_back(i, beta);
    }
    M.col_tags = detail::graded_exponents(N);

    std::vector<std::vector<std::vector<CycloElement>>> pows(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i)
        pows[i] = {detail::power_table(targets[i].point[0], N),
                   detail::power_table(targets[i].point[1], N)};

    M.entries.assign(M.rows(), std::vector<CycloElement>(M.cols(), CycloElement(M.field_order)));
    parallel_for(M.cols(), threads, [&](std::size_t c) {
        const auto& alpha = M.col_tags[c];
        for (std::size_t r = 0; r < M.rows(); ++r) {
            const auto& [ti, beta] = M.row_tags[r];
            if (beta[0] > alpha[0] || beta[1] > alpha[1]) continue;
            BigInt scale = binomial(alpha[0], beta[0]) * binomial(alpha[1], beta[1]);
            M.entries[r][c] = pows[ti][0][static_cast<std::size_t>(alpha[0] - beta[0])] *
                              pows[ti][1][static_cast<std::size_t>(alpha[1] - beta[1])] *
                              Rational(scale);
        }
    });
    return M;
}

namespace detail {

/* Scales each row by the least common denominator of its coefficients. */
inline void clear_row_denominators(std::vector<std::vector<CycloElement>>& rows) {
    for (auto& row : rows) {
        BigInt l = 1;
        for (const auto& e : row)
            for (const auto& c : e.coeffs()) l = boost::multiprecision::lcm(l, den(c));
        if (l == 1) continue;
        Rational f(l);
        for (auto& e : row) e = e * f;
    }
}

inline long long mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return r;
}

inline bool is_prime_small(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/* Smallest prime p > 10^6 with p = 1 mod m, and an element of order m in F_p.
   The choice is deterministic so reports are reproducible. */
inline std::pair<long long, long long> prime_with_root_of_unity(long m) {
    long long t = 1000000 / m + 1;
    for (;; ++t) {
        long long p = static_cast<long long>(m) * t + 1;
        if (!is_prime_small(p)) continue;
        std::vector<long> prime_factors;
        long rest = m;
        for (long q = 2; static_cast<long long>(q) * q <= rest; ++q) {
            if (rest % q == 0) {
                prime_factors.push_back(q);
                while (rest % q == 0) rest /= q;
            }
        }
        if (rest > 1) prime_factors.push_back(rest);
        for (long long h = 2; h < p; ++h) {
            long long x = mod_pow(h, (p - 1) / m, p);
            if (x == 1 && m > 1) continue;
            bool exact_order = true;
            for (long q : prime_factors)
                if (mod_pow(x, m / q, p) == 1) exact_order = false;
            if (!exact_order) continue;
            return {p, x};
        }
    }
}

inline long long reduce_mod(const BigInt& v, long long p) {
    BigInt r = v % p;
    long long out = static_cast<long long>(r);
    if (out < 0) out += p;
    return out;
}

/* Rank of the denominator-cleared matrix over F_p with zeta -> x. */
inline long modular_rank(const std::vector<std::vector<CycloElement>>& rows, long long p, long long x) {
    const std::size_t R = rows.size();
    const std::size_t C = R == 0 ? 0 : rows[0].size();
    std::vector<std::vector<long long>> M(R, std::vector<long long>(C, 0));
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) {
            long long acc = 0, xp = 1;
            for (const auto& c : rows[i][j].coeffs()) {
                if (den(c) != 1)
                    throw InvariantViolation("modular reduction needs cleared denominators"); // unreachable
                acc = (acc + reduce_mod(num(c), p) * xp) % p;
                xp = (xp * x) % p;
            }
            M[i][j] = acc;
        }
    }
    long rank = 0;
    for (std::size_t col = 0; col < C && rank < static_cast<long>(R); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < R && M[pivot][col] == 0) ++pivot;
        if (pivot == R) continue;
        std::swap(M[static_cast<std::size_t>(rank)], M[pivot]);
        long long inv = mod_pow(M[static_cast<std::size_t>(rank)][col], p - 2, p);
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < R; ++i) {
            if (M[i][col] == 0) continue;
            long long f = (M[i][col] * inv) % p;
            for (std::size_t j = col; j < C; ++j) {
                M[i][j] = (M[i][j] - f * M[static_cast<std::size_t>(rank)][j]) % p;
                if (M[i][j] < 0) M[i][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/* Exact rank over the cyclotomic fraction field by one-step fraction-free
   elimination (each sweep divides by the previous pivot, keeping entries
   small); pivoting is by fixed row order, and the result is independent of
   that choice since row operations preserve rank. */
inline long exact_rank(std::vector<std::vector<CycloElement>> M) {
    const std::size_t R = M.size();
    const std::size_t C = R == 0 ? 0 : M[0].size();
    if (R == 0 || C == 0) return 0;
    detail::clear_row_denominators(M);
    const long order = M[0][0].order();
    CycloElement prev = CycloElement::from_rational(order, 1);
    long rank = 0;
    for (std::size_t col = 0; col < C && rank < static_cast<long>(R); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < R && M[pivot][col].is_zero()) ++pivot;
        if (pivot == R) continue;
        std::swap(M[static_cast<std::size_t>(rank)], M[pivot]);
        const std::vector<CycloElement>& prow = M[static_cast<std::size_t>(rank)];
        CycloElement prev_inv = prev.invert();
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < R; ++i) {
            CycloElement f = M[i][col];
            for (std::size_t j = col + 1; j < C; ++j)
                M[i][j] = (prow[col] * M[i][j] - f * prow[j]) * prev_inv;
            M[i][col] = CycloElement(order);
        }
        prev = prow[col];
        ++rank;
    }
    return rank;
}

inline long exact_rank(const EvalMatrix& M) { return exact_rank(M.entries); }

struct RankCertificate {
    long rank = 0;         // exact rank over the field
    long long prime = 0;   // modulus of the crosscheck (0 when skipped)
    long modular_rank = 0; // rank over F_p; always <= rank
};

/* Exact rank plus the prime-reduction lower bound; a modular rank above the
   exact one is impossible and treated as an internal error. */
inline RankCertificate rank_with_crosscheck(const EvalMatrix& M) {
    RankCertificate cert;
    cert.rank = exact_rank(M.entries);
    if (M.rows() == 0 || M.cols() == 0) return cert;
    auto cleared = M.entries;
    detail::clear_row_denominators(cleared);
    auto [p, x] = detail::prime_with_root_of_unity(M.field_order);
    cert.prime = p;
    cert.modular_rank = detail::modular_rank(cleared, p, x);
    if (cert.modular_rank > cert.rank)
        throw InvariantViolation("modular rank exceeds the exact rank"); // unreachable
    return cert;
}

enum class OracleOutcome { Certified, Inconclusive };

inline const char* to_string(OracleOutcome o) {
    return o == OracleOutcome::Certified ? "Certified" : "Inconclusive";
}

struct OracleReport {
    OracleOutcome outcome = OracleOutcome::Inconclusive;
    long k = 0;
    long N = 0;
    long rows = 0; // target jet dimension
    long cols = 0;
    long rank = 0;
    long long prime = 0;
    long modular_rank = 0;
    std::vector<std::size_t> entries; // profile entries in the jet target
    std::vector<long> a_values;       // aligned jet orders
    std::string note;
};

/* Certifies the character-k vanishing by testing surjectivity of the
   evaluation map onto the jets of the supported singular points. Certified
   means full row rank (or an empty target); Inconclusive is never a
   disproof. */
inline OracleReport certify_vanishing(const SingularityProfile& profile, long k,
                                      unsigned threads = 1) {
    CharacterSupport cs = character_support(profile, k);
    OracleReport rep;
    rep.k = k;
    rep.N = cs.N;
    rep.entries = cs.entries;
    rep.a_values = cs.a_values;
    if (cs.entries.empty()) {
        rep.outcome = OracleOutcome::Certified;
        rep.note = "empty jet target: every map onto the zero space is onto";
        return rep;
    }
    std::vector<JetTarget> targets;
    for (std::size_t t = 0; t < cs.entries.size(); ++t) {
        const ProfileEntry& e = profile.entries[cs.entries[t]];
        if (e.points.size() != static_cast<std::size_t>(e.count))
            throw MissingCoordinates("profile entry " + std::to_string(cs.entries[t]) +
                                     " (" + kind_name(e.kind) + ") carries no point coordinates");
        for (const auto& pt : e.points) targets.push_back({pt, cs.a_values[t]});
        rep.rows += e.count * jet_dim(cs.a_values[t]);
    }
    if (cs.N < 0) {
        rep.note = "no forms of negative degree: surjectivity cannot be tested";
        return rep;
    }
    EvalMatrix M = build_eval_matrix(cs.N, targets, threads);
    RankCertificate cert = rank_with_crosscheck(M);
    rep.cols = static_cast<long>(M.cols());
    rep.rank = cert.rank;
    rep.prime = cert.prime;
    rep.modular_rank = cert.modular_rank;
    if (rep.rank == rep.rows) {
        rep.outcome = OracleOutcome::Certified;
        rep.note = "evaluation map is surjective: rank " + std::to_string(rep.rank) + " of " +
                   std::to_string(rep.rows);
    } else {
        rep.note = "rank " + std::to_string(rep.rank) + " < target dimension " +
                   std::to_string(rep.rows) + ": no certificate";
    }
    return rep;
}

struct LemmaBoundReport {
    long sum_a = 0;
    long target_dim = 0;
    long N_full = -1;    // sum_a - 1
    long rank_full = 0;  // must equal target_dim
    long cols_full = 0;
    long N_tight = -1;   // sum_a - 2
    long rank_tight = 0; // reported, not asserted
    long cols_tight = 0;
};

/* Property check of the interpolation bound: at N = sum_a - 1 the evaluation
   map must reach every jet target, for any distinct points; a deficiency
   there is an internal error. The rank one degree below is reported to show
   where tightness lives (collinear points can be deficient there). */
inline LemmaBoundReport check_lemma_bound(const std::vector<JetTarget>& targets,
                                          unsigned threads = 1) {
    LemmaBoundReport rep;
    for (const auto& t : targets) {
        rep.sum_a += t.order;
        rep.target_dim += jet_dim(t.order);
    }
    rep.N_full = rep.sum_a - 1;
    rep.N_tight = rep.sum_a - 2;
    if (rep.N_full >= 0) {
        EvalMatrix M = build_eval_matrix(rep.N_full, targets, threads);
        rep.cols_full = static_cast<long>(M.cols());
        rep.rank_full = exact_rank(M);
        if (rep.rank_full != rep.target_dim) {
            std::ostringstream msg;
            msg << "interpolation bound violated: rank " << rep.rank_full << " < " << rep.target_dim
                << " at N = " << rep.N_full;
            throw InvariantViolation(msg.str());
        }
    }
    if (rep.N_tight >= 0) {
        EvalMatrix M = build_eval_matrix(rep.N_tight, targets, threads);
        rep.cols_tight = static_cast<long>(M.cols());
        rep.rank_tight = exact_rank(M);
    }
    return rep;
}

/* Text dump for cross-checking in external computer-algebra systems: one row
   per line, entries in z-syntax; '#' header lines carry the shape. */
inline std::string eval_matrix_to_text(const EvalMatrix& M) {
    std::ostringstream out;
    out << "# eval matrix: N=" << M.N << " rows=" << M.rows() << " cols=" << M.cols() << " cyclo="
        << M.field_order << "\n";
    out << "# columns:";
    for (const auto& a : M.col_tags) out << " y1^" << a[0] << "*y2^" << a[1];
    out << "\n";
    for (const auto& row : M.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].to_string_compact();
        out << "\n";
    }
    return out.str();
}

} // namespace monogauge

#endif
