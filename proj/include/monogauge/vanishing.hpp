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
 * @file vanishing.hpp
 * @brief Per-character vanishing certificates for the degree-d monodromy.
 *
 * For each character k in [1, d-1] (eigenvalue theta^k = exp(2 pi i k / d))
 * the engine runs a three-stage test, recording a certificate either way:
 *
 *   1. divisibility — theta^k must be a root of some singular point's local
 *      Alexander polynomial, otherwise the eigenvalue cannot occur at all;
 *   2. counting bound — with N = d - n - 1 - k and I_k the singular points
 *      whose jet space A_k is nonempty, N >= sum_a - 1 forces the
 *      evaluation map onto the jets to be onto, killing the eigenspace
 *      (an empty I_k makes the target zero, so the bound holds vacuously
 *      whenever N >= -1);
 *   3. rank oracle (optional) — exact surjectivity test at the actual
 *      coordinates, strictly sharper than the count.
 *
 * A character that survives all stages is NotExcluded: the criterion is
 * one-directional and never asserts presence. Exclusion of the eigenvalue
 * from the first monodromy needs both k and its conjugate d - k excluded.
 * Eigenvalue 1 (k = 0) is always present with multiplicity d - 1.
 */

#ifndef MONOGAUGE_VANISHING_HPP
#define MONOGAUGE_VANISHING_HPP

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "eval_oracle.hpp"
#include "parallel.hpp"
#include "profile.hpp"
#include "wh_local.hpp"

namespace monogauge {

enum class VerdictStatus { ExcludedByDivisibility, ExcludedByBound, ExcludedByOracle, NotExcluded };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::ExcludedByDivisibility: return "ExcludedByDivisibility";
        case VerdictStatus::ExcludedByBound: return "ExcludedByBound";
        case VerdictStatus::ExcludedByOracle: return "ExcludedByOracle";
        default: return "NotExcluded";
    }
}

inline bool is_excluded(VerdictStatus s) { return s != VerdictStatus::NotExcluded; }

struct CharacterVerdict {
    long k = 0;
    VerdictStatus status = VerdictStatus::NotExcluded;
    long N = 0;                       // d - n - 1 - k
    std::vector<std::size_t> I_k;     // profile entries with nonempty A_k
    std::vector<long> a_values;       // aligned jet orders a(g_i, k)
    long sum_a = 0;                   // sum over points of a(g_i, k)
    std::string evidence;
    bool oracle_ran = false;
    OracleReport oracle;              // populated when oracle_ran
};

struct AnalysisReport {
    long d = 0;
    long identity_dimension = 0;        // multiplicity of eigenvalue 1: d - 1
    std::vector<CharacterVerdict> verdicts; // k = 1 .. d-1 in order
    std::set<long> h1_excluded;         // k with both k and d-k excluded
    std::set<long> h1_candidates;       // {0} plus the non-excluded k

    const CharacterVerdict& verdict(long k) const {
        if (k < 1 || k > d - 1) throw OutOfRange("character index must lie in [1, d-1]");
        return verdicts[static_cast<std::size_t>(k - 1)];
    }
};

/* Characters whose eigenvalue theta^k is a root of at least one singular
   point's local Alexander polynomial; all others can never contribute. */
inline std::set<long> divisibility_candidates(const SingularityProfile& profile) {
    std::set<long> orders;
    for (const auto& e : profile.entries) {
        LocalMonodromy lm = local_alexander(e.kind);
        orders.insert(lm.eigenvalue_orders.begin(), lm.eigenvalue_orders.end());
    }
    std::set<long> out;
    const long d = profile.curve_degree;
    for (long k = 1; k <= d - 1; ++k)
        if (orders.count(d / gcd_long(k, d))) out.insert(k);
    return out;
}

namespace detail {

inline CharacterVerdict analyze_character_with(const SingularityProfile& profile,
                                               const std::set<long>& candidates, long k,
                                               bool use_oracle) {
    CharacterSupport cs = character_support(profile, k);
    CharacterVerdict v;
    v.k = k;
    v.N = cs.N;
    v.I_k = cs.entries;
    v.a_values = cs.a_values;
    v.sum_a = cs.sum_a;
    const long d = profile.curve_degree;
    const long order = d / gcd_long(k, d);
    std::ostringstream ev;
    if (!candidates.count(k)) {
        v.status = VerdictStatus::ExcludedByDivisibility;
        ev << "theta^" << k << " has order " << order
           << ", which is not among the local Alexander polynomial root orders";
        v.evidence = ev.str();
        return v;
    }
    ev << "N = " << d << " - " << profile.ambient_n << " - 1 - " << k << " = " << v.N
       << "; |I_k| = " << v.I_k.size() << "; sum_a = " << v.sum_a;
    if (v.N >= v.sum_a - 1) {
        v.status = VerdictStatus::ExcludedByBound;
        ev << "; counting bound holds: N >= sum_a - 1 = " << v.sum_a - 1;
        if (v.I_k.empty()) ev << " (empty jet target)";
        v.evidence = ev.str();
        return v;
    }
    ev << "; counting bound fails: N < sum_a - 1 = " << v.sum_a - 1;
    if (use_oracle) {
        if (!profile.has_coordinates())
            throw MissingCoordinates("the rank oracle needs explicit singular point coordinates");
        v.oracle = certify_vanishing(profile, k);
        v.oracle_ran = true;
        if (v.oracle.outcome == OracleOutcome::Certified) {
            v.status = VerdictStatus::ExcludedByOracle;
            ev << "; oracle certified surjectivity (rank " << v.oracle.rank << " of "
               << v.oracle.rows << ")";
            v.evidence = ev.str();
            return v;
        }
        ev << "; oracle inconclusive (" << v.oracle.note << ")";
    }
    v.status = VerdictStatus::NotExcluded;
    v.evidence = ev.str();
    return v;
}

} // namespace detail

/* One character's certificate; see the header comment for the stage order. */
inline CharacterVerdict analyze_character(const SingularityProfile& profile, long k,
                                          bool use_oracle = false) {
    profile.validate();
    return detail::analyze_character_with(profile, divisibility_candidates(profile), k, use_oracle);
}

/* Certificates for all characters plus the conjugate-paired exclusion sets.
   Characters are analyzed in parallel into indexed slots, so the report does
   not depend on the thread count. */
inline AnalysisReport analyze_h1(const SingularityProfile& profile, bool use_oracle = false,
                                 unsigned threads = 1) {
    profile.validate();
    if (profile.ambient_n != 2)
        throw Unsupported("first-monodromy analysis expects a plane-curve profile (ambient_n = 2)");
    const long d = profile.curve_degree;
    AnalysisReport rep;
    rep.d = d;
    rep.identity_dimension = d - 1;
    rep.verdicts.assign(static_cast<std::size_t>(d - 1), CharacterVerdict{});
    const std::set<long> candidates = divisibility_candidates(profile);
    parallel_for(static_cast<std::size_t>(d - 1), threads, [&](std::size_t i) {
        long k = static_cast<long>(i) + 1;
        rep.verdicts[i] = detail::analyze_character_with(profile, candidates, k, use_oracle);
    });
    rep.h1_candidates.insert(0);
    for (long k = 1; k <= d - 1; ++k) {
        if (is_excluded(rep.verdict(k).status) && is_excluded(rep.verdict(d - k).status))
            rep.h1_excluded.insert(k);
        else
            rep.h1_candidates.insert(k);
    }
    return rep;
}

inline Json oracle_report_to_json(const OracleReport& o) {
    Json j;
    j["outcome"] = to_string(o.outcome);
    j["k"] = o.k;
    j["N"] = o.N;
    j["target_dim"] = o.rows;
    j["cols"] = o.cols;
    j["rank"] = o.rank;
    j["prime"] = o.prime;
    j["modular_rank"] = o.modular_rank;
    j["entries"] = o.entries;
    j["a_values"] = o.a_values;
    j["note"] = o.note;
    return j;
}

inline Json verdict_to_json(const CharacterVerdict& v) {
    Json j;
    j["k"] = v.k;
    j["status"] = to_string(v.status);
    j["N"] = v.N;
    j["I_k"] = v.I_k;
    j["a_values"] = v.a_values;
    j["sum_a"] = v.sum_a;
    j["evidence"] = v.evidence;
    if (v.oracle_ran) j["oracle"] = oracle_report_to_json(v.oracle);
    return j;
}

inline Json report_to_json(const AnalysisReport& r) {
    Json j;
    j["degree"] = r.d;
    j["identity_dimension"] = r.identity_dimension;
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = verdicts;
    j["h1_excluded"] = r.h1_excluded;
    j["h1_candidates"] = r.h1_candidates;
    return j;
}

} // namespace monogauge

#endif
