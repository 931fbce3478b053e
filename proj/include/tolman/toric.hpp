#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tolman/gkm_graph.hpp"

namespace tolman {

using ParamPoint3 = std::array<ParamPoly, 3>;
using VertexPair = std::pair<std::size_t, std::size_t>;

struct DelzantPolytope {
    std::string name;
    std::vector<ParamPoint3> vertices;
    std::optional<std::vector<VertexPair>> edges;  // computed from the hull when absent
};

/// Linear map R^3 -> R^2 composing a T^3 moment map down to a T^2 one.
struct MomentProjection {
    std::array<std::array<std::int64_t, 3>, 2> matrix{};

    explicit MomentProjection(std::array<std::array<std::int64_t, 3>, 2> m) : matrix(m) {
        const auto& r = matrix;
        bool rank2 = (r[0][0] * r[1][1] - r[0][1] * r[1][0]) != 0 || (r[0][0] * r[1][2] - r[0][2] * r[1][0]) != 0 ||
                     (r[0][1] * r[1][2] - r[0][2] * r[1][1]) != 0;
        if (!rank2) throw Error(ErrorCode::MalformedGraph, "moment projection must have rank 2");
    }

    std::array<ParamPoly, 2> apply(const ParamPoint3& v) const {
        std::array<ParamPoly, 2> out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) out[i] += v[j] * Rational(matrix[i][j]);
        return out;
    }
    IntVec apply(const IntVec& v) const {
        return {matrix[0][0] * v[0] + matrix[0][1] * v[1] + matrix[0][2] * v[2],
                matrix[1][0] * v[0] + matrix[1][1] * v[1] + matrix[1][2] * v[2]};
    }
};

struct BuiltinPolytopes {
    DelzantPolytope hat;
    DelzantPolytope tilde;
    MomentProjection hat_projection;
    MomentProjection tilde_projection;
};

/// The two toric pieces of Tolman's construction: CP^1 x CP^2 ("hat") and
/// P(O + O(-3)) over CP^2 ("tilde"), with their projections to T^2.
inline BuiltinPolytopes builtin_polytopes() {
    const ParamPoly z, l1 = ParamPoly::l1(), l2 = ParamPoly::l2();
    const ParamPoly s = ParamPoly::linear(1, 1), t = ParamPoly::linear(2, 1);
    DelzantPolytope hat{"tolman-hat", {{z, z, z}, {s, z, z}, {z, s, z}, {z, z, l1}, {s, z, l1}, {z, s, l1}}, {}};
    DelzantPolytope tilde{"tolman-tilde", {{z, z, z}, {t, z, z}, {z, t, z}, {l1, l1, l1}, {l1, l2, l1}, {l2, l1, l1}}, {}};
    return {hat, tilde, MomentProjection({{{1, 0, 1}, {0, 1, 0}}}), MomentProjection({{{1, 0, 0}, {0, 1, 0}}})};
}

namespace detail {

using QPoint = std::array<Rational, 3>;

inline QPoint eval_point(const ParamPoint3& p, const Rational& l1v, const Rational& l2v) {
    return {p[0].eval(l1v, l2v), p[1].eval(l1v, l2v), p[2].eval(l1v, l2v)};
}

inline QPoint sub(const QPoint& a, const QPoint& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline QPoint cross(const QPoint& a, const QPoint& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Rational dotq(const QPoint& a, const QPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Hull {
    std::vector<std::vector<std::size_t>> facets;  // vertex sets, sorted
    std::vector<VertexPair> edges;                 // sorted pairs i < j
};

/// Exact facet/edge combinatorics of the convex hull of a point set in R^3
/// whose points are all hull vertices.
inline Hull hull(const std::vector<QPoint>& pts) {
    const std::size_t n = pts.size();
    std::set<std::vector<std::size_t>> facets;
    bool full_dimensional = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                QPoint normal = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (normal == QPoint{0, 0, 0}) continue;
                int pos = 0, neg = 0;
                std::vector<std::size_t> on;
                for (std::size_t m = 0; m < n; ++m) {
                    Rational side = dotq(normal, sub(pts[m], pts[i]));
                    if (side > 0) ++pos;
                    else if (side < 0) ++neg;
                    else on.push_back(m);
                }
                if (pos || neg) full_dimensional = true;
                if (pos == 0 || neg == 0) facets.insert(on);
            }
    if (!full_dimensional) throw Error(ErrorCode::DegeneratePolytope, "vertices do not span R^3");
    Hull h;
    h.facets.assign(facets.begin(), facets.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int shared = 0;
            for (const auto& f : h.facets)
                if (std::binary_search(f.begin(), f.end(), i) && std::binary_search(f.begin(), f.end(), j)) ++shared;
            if (shared >= 2) h.edges.emplace_back(i, j);
        }
    return h;
}

inline Hull hull_at(const DelzantPolytope& p, const Rational& l1v, const Rational& l2v) {
    std::vector<QPoint> pts;
    for (const auto& v : p.vertices) pts.push_back(eval_point(v, l1v, l2v));
    return hull(pts);
}

/// Primitive integer vector positively proportional to a nonzero rational one.
inline IntVec primitive_of(const QPoint& v) {
    Integer lcm = 1;
    for (const auto& c : v) {
        Integer d = denominator_of(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    IntVec out;
    for (const auto& c : v) out.push_back(static_cast<std::int64_t>(numerator_of(c * lcm)));
    return primitive(out).first;
}

// Parameter points at which parametric combinatorics are certified.
inline const std::array<std::pair<Rational, Rational>, 2> kHullSamples{
    std::pair<Rational, Rational>{1, 2}, std::pair<Rational, Rational>{1, 3}};

}  // namespace detail

/// Hull edges, computed at (l1, l2) = (1, 2) and revalidated at (1, 3).
inline std::vector<VertexPair> polytope_edges(const DelzantPolytope& p) {
    if (p.edges) return *p.edges;
    const auto& [a1, a2] = detail::kHullSamples[0];
    const auto& [b1, b2] = detail::kHullSamples[1];
    auto first = detail::hull_at(p, a1, a2);
    auto second = detail::hull_at(p, b1, b2);
    if (first.edges != second.edges || first.facets != second.facets)
        throw Error(ErrorCode::ParametricCombinatoricsUnstable,
                    "hull of '" + p.name + "' changes between (1,2) and (1,3)");
    return first.edges;
}

inline std::size_t polytope_facet_count(const DelzantPolytope& p) {
    const auto& [a1, a2] = detail::kHullSamples[0];
    return detail::hull_at(p, a1, a2).facets.size();
}

/// Primitive outgoing edge directions at vertex v (T^3-weights), in order of
/// the neighbouring vertex index. They must form a Z^3 basis.
inline std::vector<IntVec> vertex_weights(const DelzantPolytope& p, std::size_t v) {
    if (v >= p.vertices.size()) throw Error(ErrorCode::NotDelzantVertex, "no vertex " + std::to_string(v));
    std::vector<IntVec> dirs;
    for (const auto& [i, j] : polytope_edges(p)) {
        if (i != v && j != v) continue;
        std::size_t w = i == v ? j : i;
        std::optional<IntVec> dir;
        for (const auto& [l1v, l2v] : detail::kHullSamples) {
            auto d = detail::primitive_of(
                detail::sub(detail::eval_point(p.vertices[w], l1v, l2v), detail::eval_point(p.vertices[v], l1v, l2v)));
            if (dir && *dir != d)
                throw Error(ErrorCode::ParametricCombinatoricsUnstable,
                            "edge direction at vertex " + std::to_string(v) + " depends on the parameters");
            dir = d;
        }
        dirs.push_back(*dir);
    }
    if (dirs.size() != 3)
        throw Error(ErrorCode::NotDelzantVertex,
                    "vertex " + std::to_string(v) + " has " + std::to_string(dirs.size()) + " edges");
    auto det = det3(dirs[0], dirs[1], dirs[2]);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::NotDelzantVertex,
                    "edge directions at vertex " + std::to_string(v) + " have determinant " + std::to_string(det));
    return dirs;
}

/// Integral length of the segment from vertex i to vertex j: the factor
/// a(l1, l2) with v_j - v_i = a * (primitive direction).
inline ParamPoly edge_integral_length(const DelzantPolytope& p, std::size_t i, std::size_t j) {
    const auto& [l1v, l2v] = detail::kHullSamples[0];
    IntVec dir = detail::primitive_of(
        detail::sub(detail::eval_point(p.vertices[j], l1v, l2v), detail::eval_point(p.vertices[i], l1v, l2v)));
    std::size_t k = dir[0] != 0 ? 0 : (dir[1] != 0 ? 1 : 2);
    ParamPoly a = (p.vertices[j][k] - p.vertices[i][k]) / Rational(dir[k]);
    for (std::size_t c = 0; c < 3; ++c)
        if (!(a * Rational(dir[c]) == p.vertices[j][c] - p.vertices[i][c]))
            throw Error(ErrorCode::ParametricCombinatoricsUnstable,
                        "segment " + std::to_string(i) + "-" + std::to_string(j) + " changes direction with l1, l2");
    return a;
}

struct ProjectedVertex {
    std::size_t vertex = 0;
    std::array<ParamPoly, 2> image;
    std::vector<IntVec> weights;  // L applied to the T^3-weights; not necessarily primitive
};

inline std::vector<ProjectedVertex> project_fixed_data(const DelzantPolytope& p, const MomentProjection& L) {
    std::vector<ProjectedVertex> out;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        ProjectedVertex pv{v, L.apply(p.vertices[v]), {}};
        for (const auto& w : vertex_weights(p, v)) pv.weights.push_back(L.apply(w));
        out.push_back(std::move(pv));
    }
    return out;
}

struct GlueMatch {
    std::string source;  // "hat" or "tilde"
    std::size_t vertex = 0;
    std::array<ParamPoly, 2> image;
    std::string point;  // matched fixed point id, empty if none
    bool weights_match = false;
};

struct GlueReport {
    bool ok = false;
    std::vector<GlueMatch> matches;
    std::vector<std::string> mismatches;
};

inline std::vector<IntVec> sorted_dirs(std::vector<IntVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Keeps the tilde vertices below the cut and the hat vertices above it and
/// checks that together they reproduce the fixed points of `target`: same
/// images, same weight multisets. Cut comparisons are made at (1,2) and (1,3).
inline GlueReport glue_check(const std::vector<ProjectedVertex>& hat_data, const std::vector<ProjectedVertex>& tilde_data,
                             const ParamPoly& cut = (ParamPoly::l1() + ParamPoly::l2()) / 2,
                             const GKMGraph& target = tolman_graph()) {
    GlueReport report;
    auto side = [&](const ProjectedVertex& pv, const std::string& source) {
        int sign = 0;
        for (const auto& [l1v, l2v] : detail::kHullSamples) {
            Rational diff = pv.image[1].eval(l1v, l2v) - cut.eval(l1v, l2v);
            if (diff == 0)
                throw Error(ErrorCode::VertexOnCut, source + " vertex " + std::to_string(pv.vertex) + " lies on the cut at (" +
                                                        to_string(l1v) + "," + to_string(l2v) + ")");
            int s = diff > 0 ? 1 : -1;
            if (sign != 0 && s != sign)
                throw Error(ErrorCode::ParametricCombinatoricsUnstable,
                            source + " vertex " + std::to_string(pv.vertex) + " changes side of the cut");
            sign = s;
        }
        return sign;
    };
    std::vector<std::pair<std::string, const ProjectedVertex*>> kept;
    for (const auto& pv : tilde_data)
        if (side(pv, "tilde") < 0) kept.emplace_back("tilde", &pv);
    for (const auto& pv : hat_data)
        if (side(pv, "hat") > 0) kept.emplace_back("hat", &pv);

    std::set<std::string> claimed;
    for (const auto& [source, pv] : kept) {
        GlueMatch m{source, pv->vertex, pv->image, "", false};
        for (const auto& p : target.points())
            if (p.image == pv->image) m.point = p.id;
        if (m.point.empty()) {
            report.mismatches.push_back(source + " vertex " + std::to_string(pv->vertex) + " image (" +
                                        pv->image[0].pretty() + ", " + pv->image[1].pretty() +
                                        ") is not a fixed point image");
        } else {
            if (!claimed.insert(m.point).second)
                report.mismatches.push_back("fixed point " + m.point + " is hit twice");
            std::vector<IntVec> expected;
            for (const auto& e : target.outgoing(m.point)) expected.push_back(e.direction);
            m.weights_match = sorted_dirs(pv->weights) == sorted_dirs(expected);
            if (!m.weights_match)
                report.mismatches.push_back("weights of " + source + " vertex " + std::to_string(pv->vertex) +
                                            " differ from those at " + m.point);
        }
        report.matches.push_back(std::move(m));
    }
    for (const auto& p : target.points())
        if (!claimed.count(p.id)) report.mismatches.push_back("fixed point " + p.id + " is not produced");
    report.ok = report.mismatches.empty();
    return report;
}

}  // namespace tolman
