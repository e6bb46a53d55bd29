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
 * @file selftest.hpp
 * @brief Deterministic end-to-end battery over fixed inputs.
 *
 * Every result in the battery is a pure function of the built-in inputs: the
 * emitted JSON must be byte-identical regardless of the thread count, which
 * is exactly what the determinism check compares. Keep wall-clock noise,
 * thread counts, and anything environment-dependent out of the output.
 */

#ifndef MONOGAUGE_SELFTEST_HPP
#define MONOGAUGE_SELFTEST_HPP

#include <string>
#include <vector>

#include "arrangement.hpp"
#include "assembly.hpp"
#include "eval_oracle.hpp"
#include "profile.hpp"
#include "vanishing.hpp"

namespace monogauge {

namespace detail {

inline Json selftest_family(const FamilyKey& fam, unsigned threads) {
    Arrangement A = fam.kind == "mmn" ? build_monomial(fam.m, fam.n)
                                      : build_full_monomial(fam.m, fam.n);
    SingularityProfile profile = section_profile(A, threads);
    AnalysisReport report = analyze_h1(profile, false, threads);
    AssemblyResult asmr = assemble(fam, profile, report);
    Json j;
    j["family"] = fam.display();
    j["d"] = profile.curve_degree;
    j["h1_candidates"] = report.h1_candidates;
    j["delta"] = asmr.delta.to_string();
    j["resolved"] = asmr.resolved;
    j["imports"] = asmr.imports.size();
    j["chi_U"] = asmr.chi.chi_U;
    j["delta2_degree"] = asmr.chi.delta2_degree;
    return j;
}

inline Json selftest_exceptional(const std::string& name, unsigned threads) {
    SingularityProfile profile = builtin_profile(name);
    AnalysisReport report = analyze_h1(profile, false, threads);
    AssemblyResult asmr = assemble(profile, report);
    Json j;
    j["name"] = name;
    j["d"] = profile.curve_degree;
    j["h1_candidates"] = report.h1_candidates;
    Json verdicts;
    for (long k : report.h1_candidates) {
        if (k == 0) continue;
        const CharacterVerdict& v = report.verdict(k);
        verdicts[std::to_string(k)] = {{"status", to_string(v.status)},
                                       {"N", v.N},
                                       {"sum_a", v.sum_a}};
    }
    j["verdicts"] = verdicts;
    j["delta"] = asmr.delta.to_string();
    j["resolved"] = asmr.resolved;
    Json placeholders = Json::array();
    for (const auto& p : asmr.placeholders) placeholders.push_back({{"order", p.order}, {"k", p.ks}});
    j["placeholders"] = placeholders;
    Json imports = Json::array();
    for (const auto& f : asmr.imports) imports.push_back({{"rule", f.rule}, {"k", f.k}});
    j["imports"] = imports;
    j["chi_U"] = asmr.chi.chi_U;
    return j;
}

inline Json selftest_flats(long m, long n, unsigned threads) {
    Arrangement A = build_monomial(m, n);
    std::vector<Flat2> flats = rank2_flats(A, threads);
    std::map<std::string, long> counts;
    for (const auto& f : flats) ++counts[std::to_string(f.members.size())];
    const long q = static_cast<long>(binomial(n, 2));
    bool match = true;
    std::map<long, long> expected;
    expected[m] += q;
    expected[3] += static_cast<long>(binomial(n, 3)) * m * m;
    expected[2] += static_cast<long>(binomial(n, 2) * binomial(n - 2, 2)) * m * m / 2;
    for (const auto& [mult, count] : expected) {
        if (count == 0) continue;
        auto it = counts.find(std::to_string(mult));
        if (it == counts.end() || it->second != count) match = false;
    }
    Json j;
    j["family"] = "A(" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
    j["counts"] = counts;
    j["closed_form_match"] = match;
    j["pair_partition"] = pair_partition_holds(A, flats);
    return j;
}

inline Json selftest_local() {
    Json j;
    WHType ord3 = wh_type(OrdinaryMultiple{3});
    WHType ord4 = wh_type(OrdinaryMultiple{4});
    j["nontrivial_k_ord3_d9"] = nontrivial_k(ord3, 9);
    j["nontrivial_k_ord4_d12"] = nontrivial_k(ord4, 12);
    j["a_ord4_d12_k3"] = a_suspension(ord4, 12, 3);
    j["a_ord6_d60_k10"] = a_suspension(wh_type(OrdinaryMultiple{6}), 60, 10);
    j["alexander_ord4"] = local_alexander(OrdinaryMultiple{4}).alexander.to_string();
    j["alexander_cusp"] = local_alexander(BrieskornPoint{2, 3}).alexander.to_string();
    j["milnor_ord5"] = static_cast<long>(milnor_number(wh_type(OrdinaryMultiple{5})));
    return j;
}

inline Json selftest_lemma(unsigned threads) {
    auto q = [](long num, long den_) {
        return CycloElement::from_rational(1, Rational(num) / den_);
    };
    Json j;
    {
        std::vector<JetTarget> one = {{{q(0, 1), q(0, 1)}, 4}};
        LemmaBoundReport rep = check_lemma_bound(one, threads);
        j["single_order4"] = {{"N_full", rep.N_full}, {"rank_full", rep.rank_full},
                              {"target_dim", rep.target_dim}};
    }
    {
        std::vector<JetTarget> tri = {{{q(0, 1), q(0, 1)}, 2},
                                      {{q(1, 1), q(0, 1)}, 2},
                                      {{q(0, 1), q(1, 1)}, 2}};
        LemmaBoundReport rep = check_lemma_bound(tri, threads);
        j["triangle_order2"] = {{"N_full", rep.N_full}, {"rank_full", rep.rank_full},
                                {"N_tight", rep.N_tight}, {"rank_tight", rep.rank_tight}};
    }
    {
        std::vector<JetTarget> collinear = {{{q(0, 1), q(0, 1)}, 3},
                                            {{q(1, 1), q(0, 1)}, 3},
                                            {{q(2, 1), q(0, 1)}, 3}};
        LemmaBoundReport rep = check_lemma_bound(collinear, threads);
        j["collinear_order3"] = {{"N_full", rep.N_full}, {"rank_full", rep.rank_full},
                                 {"N_tight", rep.N_tight}, {"rank_tight", rep.rank_tight},
                                 {"target_dim", rep.target_dim}};
    }
    return j;
}

inline Json selftest_oracle(unsigned threads) {
    Json j;
    {
        // coordinates force a shear (one multiple point sits at infinity in chart 0)
        Arrangement A = build_monomial(3, 3);
        SingularityProfile p = planar_profile_auto(A, threads);
        j["A333_chart"] = p.chart;
        j["A333_shear"] = p.shear;
        OracleReport rep = certify_vanishing(p, 3, threads);
        j["A333_k3"] = {{"outcome", to_string(rep.outcome)}, {"rank", rep.rank},
                        {"target_dim", rep.rows}, {"cols", rep.cols}};
    }
    {
        Arrangement A = build_monomial(4, 3);
        SingularityProfile p = planar_profile_auto(A, threads);
        OracleReport rep = certify_vanishing(p, 3, threads);
        j["A443_k3"] = {{"outcome", to_string(rep.outcome)}, {"rank", rep.rank},
                        {"target_dim", rep.rows}, {"N", rep.N}};
    }
    return j;
}

} // namespace detail

/* The full battery. The thread count changes scheduling only, never output. */
inline Json selftest_battery(unsigned threads) {
    Json root;
    root["tool"] = "monogauge";
    root["battery"] = "selftest";

    Json families = Json::array();
    const std::vector<FamilyKey> fams = {
        {"mmn", 2, 3, 0}, {"mmn", 3, 3, 0}, {"mmn", 4, 3, 0}, {"mmn", 5, 3, 0},
        {"mmn", 6, 3, 0}, {"mmn", 2, 4, 0}, {"mmn", 3, 4, 0}, {"mmn", 2, 5, 0},
        {"m1n", 2, 3, 0}, {"m1n", 3, 3, 0}, {"m1n", 4, 3, 0}, {"m1n", 2, 4, 0}};
    for (const auto& f : fams) families.push_back(detail::selftest_family(f, threads));
    root["families"] = families;

    Json exceptional = Json::array();
    exceptional.push_back(detail::selftest_exceptional("G23", threads));
    exceptional.push_back(detail::selftest_exceptional("G31", threads));
    root["exceptional"] = exceptional;

    Json flats = Json::array();
    flats.push_back(detail::selftest_flats(2, 3, threads));
    flats.push_back(detail::selftest_flats(4, 3, threads));
    flats.push_back(detail::selftest_flats(3, 4, threads));
    root["flats"] = flats;

    root["local"] = detail::selftest_local();
    root["lemma"] = detail::selftest_lemma(threads);
    root["oracle"] = detail::selftest_oracle(threads);
    return root;
}

} // namespace monogauge

#endif
