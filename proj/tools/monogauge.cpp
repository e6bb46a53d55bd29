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
 * @file monogauge.cpp
 * @brief Command-line front end.
 *
 * Subcommands:
 *   analyze  — vanishing certificates, eigenvalue candidates, assembled
 *              characteristic polynomial, Euler consistency
 *   flats    — rank-2 flat classes of an arrangement
 *   oracle   — exact-rank surjectivity runs at explicit coordinates
 *   charpoly — the established family answer, factored and expanded
 *   selftest — deterministic battery, JSON on stdout
 *
 * Exit codes: 0 success; 1 analysis-level failure (unresolved monodromy,
 * missing coordinates, internal check tripped); 2 input/usage errors.
 */

#include <iostream>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "monogauge/monogauge.hpp"

namespace mg = monogauge;

namespace {

struct RunConfig {
    std::string command;
    std::string family_kind; // "mmn" | "m1n" | "exceptional" | ""
    long m = 0;
    long n = 0;
    long j = 0;
    std::string profile_path;     // path, or builtin:G23 / builtin:G31
    std::string arrangement_path; // text arrangement file
    bool use_oracle = false;
    bool json = false;
    std::optional<long> check_k;
    unsigned threads = 0; // 0: library default
    std::string dump_matrix_path;
};

unsigned effective_threads(const RunConfig& cfg) {
    return cfg.threads ? cfg.threads : mg::default_threads();
}

/* Exactly one of family / arrangement / profile. */
void require_one_source(const RunConfig& cfg) {
    int sources = 0;
    sources += !cfg.family_kind.empty();
    sources += !cfg.arrangement_path.empty();
    sources += !cfg.profile_path.empty();
    if (sources != 1)
        throw mg::OutOfRange("exactly one input source is required: --family, --arrangement, or --profile");
}

mg::FamilyKey family_key(const RunConfig& cfg) {
    mg::FamilyKey f;
    f.kind = cfg.family_kind;
    f.m = cfg.m;
    f.n = cfg.n;
    f.j = cfg.j;
    mg::family_degree(f); // validates kind and parameters
    return f;
}

/* Loads the profile for the configured source. For families the generic
   section is computed; the oracle path needs rank-3 input for coordinates. */
mg::SingularityProfile load_profile(const RunConfig& cfg, unsigned threads) {
    if (!cfg.profile_path.empty()) return mg::profile_from_file(cfg.profile_path);
    if (!cfg.arrangement_path.empty()) {
        mg::Arrangement A = mg::arrangement_from_file(cfg.arrangement_path);
        if (cfg.use_oracle || A.dim() == 3) {
            if (A.dim() != 3)
                throw mg::MissingCoordinates(
                    "explicit coordinates need a rank-3 arrangement; apply a rational section first");
            return mg::planar_profile_auto(A, threads);
        }
        return mg::section_profile(A, threads);
    }
    mg::FamilyKey fam = family_key(cfg);
    if (fam.kind == "exceptional") {
        if (fam.j == 23 || fam.j == 31) return mg::builtin_profile("G" + std::to_string(fam.j));
        throw mg::MissingCoordinates("no built-in singularity profile for G" + std::to_string(fam.j) +
                                     "; supply one with --profile");
    }
    mg::Arrangement A =
        fam.kind == "mmn" ? mg::build_monomial(fam.m, fam.n) : mg::build_full_monomial(fam.m, fam.n);
    if (cfg.use_oracle) {
        if (fam.n != 3)
            throw mg::MissingCoordinates(
                "oracle runs need explicit coordinates, available for n = 3 sections only");
        return mg::planar_profile_auto(A, threads);
    }
    return mg::section_profile(A, threads);
}

std::optional<mg::FamilyKey> assembly_family(const RunConfig& cfg) {
    if (!cfg.family_kind.empty()) return family_key(cfg);
    return std::nullopt;
}

void print_verdict_human(const mg::CharacterVerdict& v) {
    std::cout << "k = " << v.k << ": " << mg::to_string(v.status) << "\n  " << v.evidence << "\n";
    if (v.oracle_ran)
        std::cout << "  oracle: " << mg::to_string(v.oracle.outcome) << " (rank " << v.oracle.rank
                  << " of " << v.oracle.rows << ", crosscheck mod " << v.oracle.prime << " gives "
                  << v.oracle.modular_rank << ")\n";
}

int cmd_analyze(const RunConfig& cfg) {
    const unsigned threads = effective_threads(cfg);
    require_one_source(cfg);

    // exceptional families other than G23/G31 have no profile: report the law
    if (!cfg.family_kind.empty() && cfg.family_kind == "exceptional" && cfg.j != 23 && cfg.j != 31 &&
        cfg.profile_path.empty()) {
        mg::FamilyKey fam = family_key(cfg);
        mg::KnownLaw law = mg::known_answer_law(fam);
        if (cfg.json) {
            mg::Json out;
            out["command"] = "analyze";
            out["family"] = fam.display();
            out["delta"] = law.delta.to_string();
            out["law"] = law.rule;
            out["note"] = "no singularity profile available; engine not run";
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << fam.display() << ": delta = " << law.delta.to_string() << "  [" << law.rule
                      << "; no profile, engine not run]\n";
        }
        return 0;
    }

    mg::SingularityProfile profile = load_profile(cfg, threads);

    if (cfg.check_k) {
        mg::CharacterVerdict v = mg::analyze_character(profile, *cfg.check_k, cfg.use_oracle);
        if (cfg.json) {
            mg::Json out;
            out["command"] = "analyze";
            out["degree"] = profile.curve_degree;
            out["verdict"] = mg::verdict_to_json(v);
            std::cout << out.dump(2) << "\n";
        } else {
            print_verdict_human(v);
        }
        return 0;
    }

    mg::AnalysisReport report = mg::analyze_h1(profile, cfg.use_oracle, threads);
    std::optional<mg::FamilyKey> fam = assembly_family(cfg);
    mg::AssemblyResult asmr =
        fam ? mg::assemble(*fam, profile, report) : mg::assemble(profile, report);

    if (cfg.json) {
        mg::Json out;
        out["command"] = "analyze";
        if (fam) out["family"] = fam->display();
        out["profile"] = mg::profile_to_json(profile);
        out["report"] = mg::report_to_json(report);
        out["assembly"] = mg::assembly_to_json(asmr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "degree d = " << report.d << ", eigenvalue 1 multiplicity " << report.identity_dimension
                  << "\n";
        std::cout << "h1 candidates (k): ";
        bool first = true;
        for (long k : report.h1_candidates) {
            std::cout << (first ? "" : " ") << k;
            first = false;
        }
        std::cout << "\n";
        for (long k : report.h1_candidates)
            if (k != 0) print_verdict_human(report.verdict(k));
        std::cout << "delta = " << asmr.delta.to_string() << (asmr.resolved ? "" : "  [UNRESOLVED]")
                  << "\n";
        for (const auto& f : asmr.imports)
            std::cout << "import [" << f.rule << "] k = " << f.k << ": " << f.note << "\n";
        for (const auto& p : asmr.placeholders) {
            std::cout << "placeholder: eigenvalue order " << p.order << " at k =";
            for (long k : p.ks) std::cout << " " << k;
            std::cout << " (multiplicity unknown)\n";
        }
        if (asmr.chi_checked)
            std::cout << "Euler check: chi_U = " << asmr.chi.chi_U << ", delta2 degree "
                      << asmr.chi.delta2_degree << ", consistent = " << (asmr.chi.consistent ? "yes" : "no")
                      << "\n";
        for (const auto& line : asmr.log) std::cout << "note: " << line << "\n";
    }
    return asmr.resolved ? 0 : 1;
}

int cmd_flats(const RunConfig& cfg) {
    const unsigned threads = effective_threads(cfg);
    if (cfg.profile_path.empty() == cfg.arrangement_path.empty() && cfg.family_kind.empty())
        require_one_source(cfg);
    mg::Arrangement A = [&] {
        if (!cfg.arrangement_path.empty()) return mg::arrangement_from_file(cfg.arrangement_path);
        mg::FamilyKey fam = family_key(cfg);
        if (fam.kind == "exceptional")
            throw mg::OutOfRange("flats needs hyperplane data: use --arrangement or a monomial family");
        return fam.kind == "mmn" ? mg::build_monomial(fam.m, fam.n)
                                 : mg::build_full_monomial(fam.m, fam.n);
    }();
    std::vector<mg::Flat2> flats = mg::rank2_flats(A, threads);
    std::map<std::size_t, long> counts;
    for (const auto& f : flats) ++counts[f.members.size()];
    bool pairs_ok = mg::pair_partition_holds(A, flats);
    if (cfg.json) {
        mg::Json out;
        out["command"] = "flats";
        out["hyperplanes"] = A.size();
        mg::Json cj;
        for (const auto& [mult, count] : counts) cj[std::to_string(mult)] = count;
        out["flat_classes"] = cj;
        out["flats_total"] = flats.size();
        out["pair_partition"] = pairs_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << A.size() << " hyperplanes, " << flats.size() << " rank-2 flats\n";
        for (const auto& [mult, count] : counts)
            std::cout << "  multiplicity " << mult << ": " << count << "\n";
        std::cout << "pair partition: " << (pairs_ok ? "holds" : "FAILS") << "\n";
    }
    if (!pairs_ok) return 1;
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    const unsigned threads = effective_threads(cfg);
    require_one_source(cfg);
    mg::SingularityProfile profile = load_profile(RunConfig{[&] {
                                                      RunConfig c = cfg;
                                                      c.use_oracle = true; // force coordinates
                                                      return c;
                                                  }()},
                                                  threads);
    if (!profile.has_coordinates())
        throw mg::MissingCoordinates("the oracle needs a profile with explicit coordinates");

    std::vector<long> ks;
    if (cfg.check_k) {
        ks.push_back(*cfg.check_k);
    } else {
        mg::AnalysisReport report = mg::analyze_h1(profile, false, threads);
        for (long k : report.h1_candidates)
            if (k != 0 && !mg::is_excluded(report.verdict(k).status)) ks.push_back(k);
    }

    mg::Json runs = mg::Json::array();
    for (long k : ks) {
        mg::OracleReport rep = mg::certify_vanishing(profile, k, threads);
        if (!cfg.dump_matrix_path.empty() && !rep.entries.empty() && rep.N >= 0) {
            std::vector<mg::JetTarget> targets;
            for (std::size_t t = 0; t < rep.entries.size(); ++t)
                for (const auto& pt : profile.entries[rep.entries[t]].points)
                    targets.push_back({pt, rep.a_values[t]});
            mg::EvalMatrix M = mg::build_eval_matrix(rep.N, targets, threads);
            std::string path = cfg.dump_matrix_path + ".k" + std::to_string(k) + ".txt";
            std::ofstream out(path);
            out << mg::eval_matrix_to_text(M);
            std::cerr << "matrix for k = " << k << " written to " << path << "\n";
        }
        if (cfg.json) {
            runs.push_back(mg::oracle_report_to_json(rep));
        } else {
            std::cout << "k = " << k << ": " << mg::to_string(rep.outcome) << " — " << rep.note;
            if (rep.prime) std::cout << " (crosscheck mod " << rep.prime << ": " << rep.modular_rank << ")";
            std::cout << "\n";
        }
    }
    if (cfg.json) {
        mg::Json out;
        out["command"] = "oracle";
        out["degree"] = profile.curve_degree;
        out["runs"] = runs;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_charpoly(const RunConfig& cfg) {
    if (cfg.family_kind.empty())
        throw mg::OutOfRange("charpoly needs --family (mmn, m1n, or exceptional)");
    mg::FamilyKey fam = family_key(cfg);
    mg::KnownLaw law = mg::known_answer_law(fam); // Unresolved propagates for G31
    mg::UniPoly expanded = law.delta.expand();
    if (cfg.json) {
        mg::Json out;
        out["command"] = "charpoly";
        out["family"] = fam.display();
        out["delta"] = law.delta.to_string();
        out["law"] = law.rule;
        out["degree"] = expanded.degree();
        mg::Json coeffs = mg::Json::array();
        for (const auto& c : expanded.coeffs()) coeffs.push_back(mg::rational_to_string(c));
        out["coefficients_low_to_high"] = coeffs;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fam.display() << ": delta = " << law.delta.to_string() << "  [" << law.rule << "]\n";
        std::cout << "expanded: " << expanded.to_string() << "\n";
    }
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    mg::Json battery = mg::selftest_battery(effective_threads(cfg));
    std::cout << battery.dump(2) << "\n";
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--family", cfg.family_kind, "family kind: mmn, m1n, exceptional")
        ->check(CLI::IsMember({"mmn", "m1n", "exceptional"}));
    sub->add_option("--m", cfg.m, "family parameter m");
    sub->add_option("--n", cfg.n, "family parameter n (ambient dimension)");
    sub->add_option("--j", cfg.j, "exceptional index (23..37)");
    sub->add_option("--profile", cfg.profile_path, "profile JSON path or builtin:G23 / builtin:G31");
    sub->add_option("--arrangement", cfg.arrangement_path, "arrangement text file");
    sub->add_option("--threads", cfg.threads, "worker threads (default: MONOGAUGE_THREADS or hardware)");
    sub->add_flag("--json", cfg.json, "emit JSON instead of human-readable text");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monogauge — exact monodromy eigenvalue certificates for plane curves and arrangements"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* analyze = app.add_subcommand("analyze", "vanishing certificates and assembled charpoly");
    add_common(analyze, cfg);
    long check_k_value = -1;
    analyze->add_option("--check-k", check_k_value, "analyze a single character k");
    analyze->add_flag("--use-oracle", cfg.use_oracle, "escalate to the exact-rank oracle");

    CLI::App* flats = app.add_subcommand("flats", "rank-2 flat classes");
    add_common(flats, cfg);

    CLI::App* oracle = app.add_subcommand("oracle", "exact-rank surjectivity runs");
    add_common(oracle, cfg);
    long oracle_k_value = -1;
    oracle->add_option("--check-k", oracle_k_value, "single character k (default: all unresolved)");
    oracle->add_option("--dump-matrix", cfg.dump_matrix_path,
                       "write evaluation matrices to <path>.k<K>.txt");

    CLI::App* charpoly = app.add_subcommand("charpoly", "established family answer");
    add_common(charpoly, cfg);

    CLI::App* selftest = app.add_subcommand("selftest", "deterministic battery (JSON on stdout)");
    add_common(selftest, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage problems are input errors
    }

    try {
        if (analyze->parsed()) {
            cfg.command = "analyze";
            if (analyze->count("--check-k")) cfg.check_k = check_k_value;
            return cmd_analyze(cfg);
        }
        if (flats->parsed()) {
            cfg.command = "flats";
            return cmd_flats(cfg);
        }
        if (oracle->parsed()) {
            cfg.command = "oracle";
            if (oracle->count("--check-k")) cfg.check_k = oracle_k_value;
            return cmd_oracle(cfg);
        }
        if (charpoly->parsed()) {
            cfg.command = "charpoly";
            return cmd_charpoly(cfg);
        }
        cfg.command = "selftest";
        return cmd_selftest(cfg);
    } catch (const mg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mg::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mg::Unresolved& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return 1;
    } catch (const mg::MissingCoordinates& e) {
        std::cerr << "missing coordinates: " << e.what() << "\n";
        return 1;
    } catch (const mg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
