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
 * @file profile.hpp
 * @brief Singularity profiles of plane curves: multiplicity classes of
 *        singular points, optional exact coordinates, JSON serialization.
 *
 * A profile lists the singular points of a degree-d plane curve grouped into
 * classes of equal local type. For a curve obtained by generically sectioning
 * a central arrangement, the classes come from rank-2 flats and every local
 * type is an ordinary multiple point. Coordinates are optional: bound-only
 * analysis needs none, the evaluation oracle needs all of them.
 *
 * JSON shape:
 *   {"degree": d, "ambient_n": 2, "line_arrangement": true,
 *    "singularities": [{"count": c, "kind": {"ordinary": m}}, ...],
 *    "coordinates": {"field_order": m, "chart": 0, "shear": 0,
 *                    "by_entry": [[["x","y"], ...], ...]}}
 * where "coordinates" is optional and coordinate strings use z-syntax.
 */

#ifndef MONOGAUGE_PROFILE_HPP
#define MONOGAUGE_PROFILE_HPP

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arrangement.hpp"
#include "errors.hpp"
#include "wh_local.hpp"

namespace monogauge {

using Json = nlohmann::json;

struct ProfileEntry {
    long count = 0;
    SingularityKind kind;
    /* Affine coordinates, one per point; empty when unknown, else size == count. */
    std::vector<std::array<CycloElement, 2>> points;
};

struct SingularityProfile {
    long curve_degree = 0;
    long ambient_n = 2;
    long field_order = 1; // cyclotomic order of the coordinate field
    bool line_arrangement = false;
    std::string name;   // optional display name (e.g. a built-in id)
    std::string source; // optional data provenance note
    long chart = -1;    // chart index of the coordinates, -1 when none
    long shear = 0;     // shear parameter applied before taking the chart
    std::vector<ProfileEntry> entries;

    bool has_coordinates() const {
        for (const auto& e : entries)
            if (e.points.size() != static_cast<std::size_t>(e.count)) return false;
        return true;
    }

    void validate() const {
        if (curve_degree < 1) throw OutOfRange("profile degree must be >= 1");
        if (ambient_n < 2) throw OutOfRange("profile ambient dimension must be >= 2");
        std::set<std::array<CycloElement, 2>> seen;
        for (const auto& e : entries) {
            if (e.count < 1) throw OutOfRange("profile entry count must be >= 1");
            if (!e.points.empty() && e.points.size() != static_cast<std::size_t>(e.count))
                throw OutOfRange("profile entry has " + std::to_string(e.points.size()) +
                                 " coordinates for " + std::to_string(e.count) + " points");
            for (const auto& pt : e.points) {
                if (pt[0].order() != field_order || pt[1].order() != field_order)
                    throw OrderMismatch("point coordinates must live in the declared field");
                if (!seen.insert(pt).second)
                    throw DuplicatePoint("repeated singular point (" + pt[0].to_string_compact() + ", " +
                                         pt[1].to_string_compact() + ")");
            }
        }
        if (line_arrangement) {
            BigInt pair_sum = 0;
            for (const auto& e : entries) {
                if (!std::holds_alternative<OrdinaryMultiple>(e.kind))
                    throw InvariantViolation("a line-arrangement profile admits only ordinary points");
                pair_sum += BigInt(e.count) * binomial(kind_multiplicity(e.kind), 2);
            }
            BigInt expected = binomial(curve_degree, 2);
            if (pair_sum != expected) {
                std::ostringstream msg;
                msg << "line-pair identity fails: sum count*C(mult,2) = " << pair_sum << " but C("
                    << curve_degree << ",2) = " << expected;
                throw InvariantViolation(msg.str());
            }
        }
    }
};

namespace detail {

inline SingularityProfile profile_from_counts(const Arrangement& A,
                                              const std::map<std::size_t, long>& counts) {
    SingularityProfile p;
    p.curve_degree = static_cast<long>(A.size());
    p.field_order = A.field_order();
    p.line_arrangement = true;
    for (const auto& [mult, count] : counts)
        p.entries.push_back({count, OrdinaryMultiple{static_cast<long>(mult)}, {}});
    return p;
}

inline void attach_points(SingularityProfile& p, const std::vector<PlanarPoint>& points) {
    std::map<std::size_t, std::vector<std::array<CycloElement, 2>>> by_mult;
    for (const auto& pt : points) by_mult[pt.members.size()].push_back(pt.coords);
    for (auto& e : p.entries) {
        auto it = by_mult.find(static_cast<std::size_t>(kind_multiplicity(e.kind)));
        if (it == by_mult.end() || static_cast<long>(it->second.size()) != e.count)
            throw InvariantViolation("point classes do not match the flat classes"); // unreachable
        e.points = it->second;
    }
}

} // namespace detail

/* Multiplicity classes of the generic plane section: one ordinary m-point per
   rank-2 flat of multiplicity m. Entries are sorted by multiplicity. */
inline SingularityProfile section_profile(const Arrangement& A, unsigned threads = 1) {
    std::vector<Flat2> flats = rank2_flats(A, threads);
    std::map<std::size_t, long> counts;
    for (const auto& f : flats) ++counts[f.members.size()];
    SingularityProfile p = detail::profile_from_counts(A, counts);
    p.validate();
    return p;
}

/* Section profile with exact affine coordinates in the chart x_chart = 1.
   Requires ambient dimension 3 (the section is the arrangement itself). */
inline SingularityProfile planar_points(const Arrangement& A, long chart, unsigned threads = 1) {
    std::vector<Flat2> flats = rank2_flats(A, threads);
    std::vector<PlanarPoint> pts = detail::planar_points_impl(A, flats, chart);
    std::map<std::size_t, long> counts;
    for (const auto& f : flats) ++counts[f.members.size()];
    SingularityProfile p = detail::profile_from_counts(A, counts);
    p.chart = chart;
    detail::attach_points(p, pts);
    p.validate();
    return p;
}

/* As planar_points, but picks the chart automatically (deterministic shears). */
inline SingularityProfile planar_profile_auto(const Arrangement& A, unsigned threads = 1) {
    PlanarChart pc = planar_flat_points_auto(A, threads);
    std::map<std::size_t, long> counts;
    for (const auto& pt : pc.points) ++counts[pt.members.size()];
    SingularityProfile p = detail::profile_from_counts(A, counts);
    p.chart = pc.chart;
    p.shear = pc.shear;
    detail::attach_points(p, pc.points);
    p.validate();
    return p;
}

/* Built-in bound-only profiles for two well-known reflection arrangements'
   generic plane sections; counts as in the published invariant tables. */
inline SingularityProfile builtin_profile(const std::string& name) {
    SingularityProfile p;
    p.line_arrangement = true;
    p.source = "reflection-arrangement invariant tables";
    if (name == "G23") {
        p.curve_degree = 15;
        p.name = "G23";
        p.entries = {{15, OrdinaryMultiple{2}, {}}, {10, OrdinaryMultiple{3}, {}},
                     {6, OrdinaryMultiple{5}, {}}};
    } else if (name == "G31") {
        p.curve_degree = 60;
        p.name = "G31";
        p.entries = {{360, OrdinaryMultiple{2}, {}}, {320, OrdinaryMultiple{3}, {}},
                     {30, OrdinaryMultiple{6}, {}}};
    } else {
        throw OutOfRange("unknown built-in profile '" + name + "' (have: G23, G31)");
    }
    p.validate();
    return p;
}

inline Json kind_to_json(const SingularityKind& kind) {
    Json j;
    if (const auto* o = std::get_if<OrdinaryMultiple>(&kind)) {
        j["ordinary"] = o->m;
    } else if (const auto* b = std::get_if<BrieskornPoint>(&kind)) {
        j["brieskorn"] = {b->a, b->b};
    } else {
        const auto& g = std::get<GeneralWH>(kind).type;
        j["wh"] = {{"weights", g.weights}, {"degree", g.degree}};
    }
    return j;
}

inline SingularityKind kind_from_json(const Json& j) {
    if (j.contains("ordinary")) return OrdinaryMultiple{j.at("ordinary").get<long>()};
    if (j.contains("brieskorn")) {
        auto v = j.at("brieskorn").get<std::vector<long>>();
        if (v.size() != 2) throw ParseError("brieskorn kind needs two exponents", 1, 1);
        return BrieskornPoint{v[0], v[1]};
    }
    if (j.contains("wh")) {
        WHType g;
        g.weights = j.at("wh").at("weights").get<std::vector<long>>();
        g.degree = j.at("wh").at("degree").get<long>();
        return GeneralWH{g};
    }
    throw ParseError("unknown singularity kind " + j.dump(), 1, 1);
}

inline Json profile_to_json(const SingularityProfile& p) {
    Json j;
    j["degree"] = p.curve_degree;
    j["ambient_n"] = p.ambient_n;
    j["line_arrangement"] = p.line_arrangement;
    if (!p.name.empty()) j["name"] = p.name;
    if (!p.source.empty()) j["source"] = p.source;
    Json sing = Json::array();
    bool any_points = false;
    for (const auto& e : p.entries) {
        Json je;
        je["count"] = e.count;
        je["kind"] = kind_to_json(e.kind);
        sing.push_back(je);
        if (!e.points.empty()) any_points = true;
    }
    j["singularities"] = sing;
    if (any_points) {
        Json coords;
        coords["field_order"] = p.field_order;
        coords["chart"] = p.chart;
        coords["shear"] = p.shear;
        Json by_entry = Json::array();
        for (const auto& e : p.entries) {
            Json pts = Json::array();
            for (const auto& pt : e.points)
                pts.push_back({pt[0].to_string_compact(), pt[1].to_string_compact()});
            by_entry.push_back(pts);
        }
        coords["by_entry"] = by_entry;
        j["coordinates"] = coords;
    }
    return j;
}

inline SingularityProfile profile_from_json(const Json& j) {
    SingularityProfile p;
    try {
        p.curve_degree = j.at("degree").get<long>();
        p.ambient_n = j.value("ambient_n", 2L);
        p.line_arrangement = j.value("line_arrangement", false);
        p.name = j.value("name", std::string());
        p.source = j.value("source", std::string());
        for (const auto& je : j.at("singularities"))
            p.entries.push_back({je.at("count").get<long>(), kind_from_json(je.at("kind")), {}});
        if (j.contains("coordinates")) {
            const Json& coords = j.at("coordinates");
            p.field_order = coords.at("field_order").get<long>();
            p.chart = coords.value("chart", -1L);
            p.shear = coords.value("shear", 0L);
            const Json& by_entry = coords.at("by_entry");
            if (by_entry.size() != p.entries.size())
                throw ParseError("coordinates/by_entry length must match singularities", 1, 1);
            for (std::size_t i = 0; i < p.entries.size(); ++i) {
                for (const auto& pt : by_entry[i]) {
                    if (!pt.is_array() || pt.size() != 2)
                        throw ParseError("each point must be a [x, y] pair", 1, 1);
                    p.entries[i].points.push_back(
                        {CycloElement::parse(p.field_order, pt[0].get<std::string>()),
                         CycloElement::parse(p.field_order, pt[1].get<std::string>())});
                }
            }
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("profile JSON: ") + e.what(), 1, 1);
    }
    p.validate();
    return p;
}

/* Accepts "builtin:G23" / "builtin:G31" (or the bare names) or a JSON path. */
inline SingularityProfile profile_from_file(const std::string& path) {
    std::string name = path;
    if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
    if (name == "G23" || name == "G31") return builtin_profile(name);
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open profile file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("profile JSON: ") + e.what(), 1, 1);
    }
    return profile_from_json(j);
}

/* The per-character support data of the vanishing criterion: which entries
   have a nonempty jet space A_k (decided by monomial enumeration), their jet
   orders, and the weighted total sum_a = sum over points of a(g_i, k). */
struct CharacterSupport {
    long k = 0;
    long N = 0; // curve_degree - ambient_n - 1 - k
    std::vector<std::size_t> entries;
    std::vector<long> a_values; // aligned with entries
    long sum_a = 0;
};

inline CharacterSupport character_support(const SingularityProfile& p, long k) {
    if (k < 1 || k > p.curve_degree - 1) throw OutOfRange("character index must lie in [1, d-1]");
    CharacterSupport cs;
    cs.k = k;
    cs.N = p.curve_degree - p.ambient_n - 1 - k;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        WHType g = wh_type(p.entries[i].kind);
        SuspensionData s = suspension_type(g, p.curve_degree);
        long D = s.mu - s.d1 * g.weight_sum() - s.e1 * k;
        if (D < 0) continue;
        std::vector<long> w(s.type.weights.begin(), s.type.weights.end() - 1);
        if (!has_weighted_monomial(w, D)) continue;
        long a = a_suspension(g, p.curve_degree, k);
        cs.entries.push_back(i);
        cs.a_values.push_back(a);
        cs.sum_a += p.entries[i].count * a;
    }
    return cs;
}

} // namespace monogauge

#endif
