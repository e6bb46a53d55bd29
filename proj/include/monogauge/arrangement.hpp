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
 * @file arrangement.hpp
 * @brief Central hyperplane arrangements over cyclotomic fields.
 *
 * Hyperplanes are linear forms through the origin, stored as covectors whose
 * first nonzero entry is scaled to 1; with that normalization proportional
 * covectors are identical, so duplicate detection is plain equality. Rank-2
 * flats are codimension-2 intersections, identified by the canonical reduced
 * row echelon basis of the span of their defining pair of covectors.
 *
 * Text file format:
 *     cyclo <m>
 *     dim <n>
 *     <n whitespace-separated field elements per line, one hyperplane each>
 * with '#' comment lines and blank lines ignored. Field elements use the
 * z-expression syntax and must not contain internal whitespace.
 */

#ifndef MONOGAUGE_ARRANGEMENT_HPP
#define MONOGAUGE_ARRANGEMENT_HPP

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "rational.hpp"

namespace monogauge {

using Covector = std::vector<CycloElement>;

/* Scales the covector so its first nonzero entry is 1. */
inline void normalize_covector(Covector& c) {
    for (auto& x : c) {
        if (!x.is_zero()) {
            if (x == CycloElement::from_rational(x.order(), 1)) return;
            CycloElement inv = x.invert();
            for (auto& y : c) y = y * inv;
            return;
        }
    }
    throw OutOfRange("zero covector does not define a hyperplane");
}

struct Hyperplane {
    Covector covector;
    std::string label;
};

class Arrangement {
public:
    Arrangement(long field_order, std::size_t dim) : field_order_(field_order), dim_(dim) {
        if (field_order < 1) throw OutOfRange("field order must be >= 1");
        if (dim < 2) throw OutOfRange("ambient dimension must be >= 2");
    }

    void add(Covector covector, std::string label) {
        if (covector.size() != dim_) throw OutOfRange("covector length does not match ambient dimension");
        for (const auto& x : covector)
            if (x.order() != field_order_)
                throw OrderMismatch("covector entries must live in the declared cyclotomic field");
        normalize_covector(covector);
        for (const auto& h : planes_)
            if (h.covector == covector)
                throw InvariantViolation("hyperplanes must be pairwise non-proportional (duplicate '" +
                                         label + "' vs '" + h.label + "')");
        planes_.push_back({std::move(covector), std::move(label)});
    }

    long field_order() const { return field_order_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return planes_.size(); }
    const std::vector<Hyperplane>& planes() const { return planes_; }
    const Hyperplane& operator[](std::size_t i) const { return planes_.at(i); }

private:
    long field_order_;
    std::size_t dim_;
    std::vector<Hyperplane> planes_;
};

/* x_i - z^a x_j for 0 <= i < j < n, 0 <= a < m. For m = 1 this is the braid
   arrangement, allowed from n >= 4 on; for m >= 2 it needs n >= 3. */
inline Arrangement build_monomial(long m, long n) {
    bool ok = (m >= 2 && n >= 3) || (m == 1 && n >= 4);
    if (!ok) throw OutOfRange("monomial family requires m >= 2, n >= 3 (or m = 1, n >= 4)");
    Arrangement A(m, static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            for (long a = 0; a < m; ++a) {
                Covector c(static_cast<std::size_t>(n), CycloElement(m));
                c[static_cast<std::size_t>(i)] = CycloElement::from_rational(m, 1);
                c[static_cast<std::size_t>(j)] = -CycloElement::zeta_pow(m, a);
                std::string label = "x" + std::to_string(i) + "-" +
                                    (a == 0 ? "" : "z^" + std::to_string(a) + "*") + "x" + std::to_string(j);
                A.add(std::move(c), std::move(label));
            }
        }
    }
    return A;
}

/* The monomial arrangement plus the n coordinate hyperplanes. */
inline Arrangement build_full_monomial(long m, long n) {
    if (m < 2 || n < 3) throw OutOfRange("full monomial family requires m >= 2 and n >= 3");
    Arrangement A = build_monomial(m, n);
    Arrangement full(m, static_cast<std::size_t>(n));
    for (const auto& h : A.planes()) full.add(h.covector, h.label);
    for (long i = 0; i < n; ++i) {
        Covector c(static_cast<std::size_t>(n), CycloElement(m));
        c[static_cast<std::size_t>(i)] = CycloElement::from_rational(m, 1);
        full.add(std::move(c), "x" + std::to_string(i));
    }
    return full;
}

struct Flat2 {
    std::vector<Covector> basis; // canonical reduced row echelon, 2 rows
    std::vector<std::size_t> members;
};

namespace detail {

/* Canonical reduced row echelon form of a small stack of covectors. */
inline std::vector<Covector> rref(std::vector<Covector> rows) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        CycloElement inv = rows[r][col].invert();
        for (auto& x : rows[r]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            CycloElement f = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r, Covector{});
    return rows;
}

inline bool covector_rows_less(const std::vector<Covector>& a, const std::vector<Covector>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] != b[i][j]) return a[i][j] < b[i][j];
        }
    }
    return false;
}

struct RowsLess {
    bool operator()(const std::vector<Covector>& a, const std::vector<Covector>& b) const {
        return covector_rows_less(a, b);
    }
};

} // namespace detail

/* All rank-2 flats, each with the sorted list of hyperplanes containing it.
   Pairs are processed in parallel; the merge is index-ordered, so the result
   is independent of the thread count. */
inline std::vector<Flat2> rank2_flats(const Arrangement& A, unsigned threads = 1) {
    const std::size_t n = A.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<Covector>> keys(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        const auto& [i, j] = pairs[p];
        std::vector<Covector> rows = {A[i].covector, A[j].covector};
        rows = detail::rref(std::move(rows));
        if (rows.size() != 2)
            throw InvariantViolation("pair of distinct hyperplanes must span rank 2"); // unreachable
        keys[p] = std::move(rows);
    });

    std::map<std::vector<Covector>, std::set<std::size_t>, detail::RowsLess> groups;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto& members = groups[keys[p]];
        members.insert(pairs[p].first);
        members.insert(pairs[p].second);
    }

    std::vector<Flat2> out;
    out.reserve(groups.size());
    for (auto& [basis, members] : groups)
        out.push_back({basis, std::vector<std::size_t>(members.begin(), members.end())});
    return out;
}

/* Sum over flats of C(multiplicity, 2) must tile the C(|A|, 2) pairs. */
inline bool pair_partition_holds(const Arrangement& A, const std::vector<Flat2>& flats) {
    BigInt total = 0;
    for (const auto& f : flats) total += binomial(static_cast<long>(f.members.size()), 2);
    return total == binomial(static_cast<long>(A.size()), 2);
}

/* Applies the substitution x -> M y; covectors transform by c -> c M. */
inline Arrangement transform(const Arrangement& A, const std::vector<std::vector<Rational>>& M) {
    const std::size_t n = A.dim();
    if (M.size() != n) throw OutOfRange("coordinate change must be a square matrix of the ambient size");
    for (const auto& row : M)
        if (row.size() != n) throw OutOfRange("coordinate change must be a square matrix of the ambient size");
    // exact determinant by fraction-free expansion over the small fixed size
    std::vector<std::vector<Rational>> W = M;
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && W[pivot][c] == 0) ++pivot;
        if (pivot == n) throw OutOfRange("coordinate change matrix is singular");
        if (pivot != c) {
            std::swap(W[pivot], W[c]);
            det = -det;
        }
        det *= W[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = W[i][c] / W[c][c];
            for (std::size_t j = c; j < n; ++j) W[i][j] -= f * W[c][j];
        }
    }
    if (det == 0) throw OutOfRange("coordinate change matrix is singular");

    Arrangement out(A.field_order(), n);
    for (const auto& h : A.planes()) {
        Covector c(n, CycloElement(A.field_order()));
        for (std::size_t i = 0; i < n; ++i) {
            CycloElement acc(A.field_order());
            for (std::size_t j = 0; j < n; ++j) acc = acc + h.covector[j] * M[j][i];
            c[i] = std::move(acc);
        }
        out.add(std::move(c), h.label);
    }
    return out;
}

struct PlanarPoint {
    std::array<CycloElement, 2> coords;
    std::vector<std::size_t> members;
};

namespace detail {

/* Spanning vector of the line cut out by a rank-2 flat in dimension 3. */
inline std::vector<CycloElement> flat_direction(const Flat2& flat, long order) {
    const auto& rows = flat.basis;
    const std::size_t n = 3;
    std::array<long, 2> pivots{-1, -1};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[r][j].is_zero()) {
                pivots[r] = static_cast<long>(j);
                break;
            }
        }
    }
    long free_col = 0 + 1 + 2 - pivots[0] - pivots[1];
    std::vector<CycloElement> v(n, CycloElement(order));
    v[static_cast<std::size_t>(free_col)] = CycloElement::from_rational(order, 1);
    for (std::size_t r = 0; r < 2; ++r)
        v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free_col)];
    return v;
}

inline std::vector<PlanarPoint> planar_points_impl(const Arrangement& A, const std::vector<Flat2>& flats,
                                                   long chart) {
    if (A.dim() != 3) throw OutOfRange("planar points require ambient dimension 3");
    if (chart < 0 || chart > 2) throw OutOfRange("chart index must be 0, 1 or 2");
    std::vector<PlanarPoint> out;
    out.reserve(flats.size());
    for (const auto& f : flats) {
        auto v = flat_direction(f, A.field_order());
        const CycloElement& vc = v[static_cast<std::size_t>(chart)];
        if (vc.is_zero()) {
            std::string who;
            for (std::size_t m : f.members) who += (who.empty() ? "" : ",") + A[m].label;
            throw ChartHitsSingularity("flat {" + who + "} lies at infinity in chart x" +
                                       std::to_string(chart));
        }
        CycloElement inv = vc.invert();
        std::array<CycloElement, 2> coords{CycloElement(A.field_order()), CycloElement(A.field_order())};
        std::size_t slot = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (static_cast<long>(i) == chart) continue;
            coords[slot++] = v[i] * inv;
        }
        out.push_back({std::move(coords), f.members});
    }
    return out;
}

} // namespace detail

/* Affine coordinates of every rank-2 flat in the chart x_chart = 1; throws
   ChartHitsSingularity if some flat lies on the line at infinity. */
inline std::vector<PlanarPoint> planar_flat_points(const Arrangement& A, long chart, unsigned threads = 1) {
    return detail::planar_points_impl(A, rank2_flats(A, threads), chart);
}

struct PlanarChart {
    long chart = 0;
    long shear = 0; // parameter of the rational coordinate change applied (0 = none)
    std::vector<PlanarPoint> points;
};

/* Tries chart x0 directly, then deterministic rational coordinate changes
   x0 -> x0 + t x1 + t^2 x2 for t = 1, 2, ...; each flat direction excludes
   at most two values of t, so the loop terminates. The flat profile is
   recomputed after the change as a validity check. */
inline PlanarChart planar_flat_points_auto(const Arrangement& A, unsigned threads = 1) {
    std::vector<Flat2> flats = rank2_flats(A, threads);
    try {
        return {0, 0, detail::planar_points_impl(A, flats, 0)};
    } catch (const ChartHitsSingularity&) {
    }
    std::map<std::size_t, std::size_t> profile;
    for (const auto& f : flats) ++profile[f.members.size()];
    long limit = 2 * static_cast<long>(flats.size()) + 3;
    for (long t = 1; t <= limit; ++t) {
        std::vector<std::vector<Rational>> M = {{Rational(1), Rational(0), Rational(0)},
                                                {Rational(t), Rational(1), Rational(0)},
                                                {Rational(t) * t, Rational(0), Rational(1)}};
        // covector row c maps to c M, so x0' picks up t x1 + t^2 x2
        Arrangement sheared = transform(A, M);
        std::vector<Flat2> sheared_flats = rank2_flats(sheared, threads);
        std::map<std::size_t, std::size_t> sheared_profile;
        for (const auto& f : sheared_flats) ++sheared_profile[f.members.size()];
        if (sheared_profile != profile)
            throw InvariantViolation("coordinate change altered the flat profile"); // unreachable
        try {
            return {0, t, detail::planar_points_impl(sheared, sheared_flats, 0)};
        } catch (const ChartHitsSingularity&) {
        }
    }
    throw InvariantViolation("no admissible chart found"); // unreachable by the root-count bound
}

inline std::string arrangement_to_text(const Arrangement& A) {
    std::ostringstream out;
    out << "cyclo " << A.field_order() << "\n";
    out << "dim " << A.dim() << "\n";
    for (const auto& h : A.planes()) {
        for (std::size_t i = 0; i < h.covector.size(); ++i)
            out << (i ? " " : "") << h.covector[i].to_string_compact();
        out << "\n";
    }
    return out.str();
}

inline Arrangement arrangement_from_stream(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long order = -1, dim = -1;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;
        if (order < 0) {
            if (tokens.size() != 2 || tokens[0] != "cyclo")
                throw ParseError("expected 'cyclo <m>'", lineno, 1);
            order = std::atol(tokens[1].c_str());
            if (order < 1) throw ParseError("cyclotomic order must be >= 1", lineno, 7);
            continue;
        }
        if (dim < 0) {
            if (tokens.size() != 2 || tokens[0] != "dim")
                throw ParseError("expected 'dim <n>'", lineno, 1);
            dim = std::atol(tokens[1].c_str());
            if (dim < 2) throw ParseError("ambient dimension must be >= 2", lineno, 5);
            continue;
        }
        rows.emplace_back(lineno, std::move(tokens));
    }
    if (order < 0) throw ParseError("missing 'cyclo <m>' header", lineno + 1, 1);
    if (dim < 0) throw ParseError("missing 'dim <n>' header", lineno + 1, 1);
    Arrangement A(order, static_cast<std::size_t>(dim));
    std::size_t index = 0;
    for (const auto& [ln, tokens] : rows) {
        if (tokens.size() != static_cast<std::size_t>(dim))
            throw ParseError("expected " + std::to_string(dim) + " covector entries, got " +
                                 std::to_string(tokens.size()),
                             ln, 1);
        Covector c;
        c.reserve(tokens.size());
        for (const auto& t : tokens) {
            try {
                c.push_back(CycloElement::parse(order, t));
            } catch (const ParseError& e) {
                throw ParseError("bad field element: " + e.message, ln, e.column);
            }
        }
        try {
            A.add(std::move(c), "L" + std::to_string(index));
        } catch (const Error& e) {
            throw ParseError(e.what(), ln, 1);
        }
        ++index;
    }
    if (A.size() == 0) throw ParseError("arrangement has no hyperplanes", lineno + 1, 1);
    return A;
}

inline Arrangement arrangement_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open arrangement file '" + path + "'");
    return arrangement_from_stream(in);
}

} // namespace monogauge

#endif
