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

#include "tolman/int_vec.hpp"
#include "tolman/param_poly.hpp"

namespace tolman {

struct FixedPoint {
    std::string id;
    std::array<ParamPoly, 2> image;  // moment map value, affine in (l1, l2)
};

/// Image of an invariant sphere. `direction` is primitive and points from
/// tail to head.
struct Edge {
    std::string tail;
    std::string head;
    IntVec direction;

    Edge reversed() const { return {head, tail, negated(direction)}; }
};

/// Orientation-free identity of an edge: its endpoint ids, sorted.
using EdgeKey = std::pair<std::string, std::string>;

inline EdgeKey edge_key(const Edge& e) {
    return e.tail < e.head ? EdgeKey{e.tail, e.head} : EdgeKey{e.head, e.tail};
}

/// Values of a degree-2 class on every invariant sphere.
using EdgeValues = std::map<EdgeKey, Rational>;

/// Subcircle t -> t(a, b) of the two-torus.
struct CircleAction {
    std::int64_t a = 0;
    std::int64_t b = 0;

    CircleAction() = default;
    CircleAction(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
        if (a == 0 && b == 0) throw Error(ErrorCode::AxisSubcircle, "circle action (0,0) is trivial");
    }

    /// Weight on the tangent line with primitive direction (x1, x2).
    std::int64_t weight(const IntVec& dir) const { return a * dir[0] + b * dir[1]; }
};

// Sample parameters at which sphere areas must be positive.
inline const std::array<std::pair<Rational, Rational>, 2> kAreaSamples{
    std::pair<Rational, Rational>{1, 2}, std::pair<Rational, Rational>{2, 5}};

/// The area factor a with head - tail = a * dir, or nullopt if the moment
/// difference is not parallel to dir.
inline std::optional<ParamPoly> area_factor(const std::array<ParamPoly, 2>& tail, const std::array<ParamPoly, 2>& head,
                                            const IntVec& dir) {
    ParamPoly dx = head[0] - tail[0];
    ParamPoly dy = head[1] - tail[1];
    ParamPoly a = dir[0] != 0 ? dx / Rational(dir[0]) : dy / Rational(dir[1]);
    if (!(a * Rational(dir[0]) == dx) || !(a * Rational(dir[1]) == dy)) return std::nullopt;
    return a;
}

/// A GKM graph of a Hamiltonian T^2-space with isolated fixed points.
/// Validated on construction and immutable afterwards.
class GKMGraph {
public:
    GKMGraph(std::vector<FixedPoint> points, std::vector<Edge> edges)
        : points_(std::move(points)), edges_(std::move(edges)) {
        validate();
    }

    const std::vector<FixedPoint>& points() const noexcept { return points_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    const FixedPoint& point(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error(ErrorCode::NoSuchFixedPoint, "no fixed point '" + id + "'");
        return points_[it->second];
    }

    /// Number of edges at every point (= complex dimension).
    std::size_t valence() const noexcept { return valence_; }

    /// Edges at `id`, oriented away from it, sorted lexicographically by
    /// direction. This is the canonical weight order.
    std::vector<Edge> outgoing(const std::string& id) const {
        point(id);
        std::vector<Edge> out;
        for (const auto& e : edges_) {
            if (e.tail == id) out.push_back(e);
            else if (e.head == id) out.push_back(e.reversed());
        }
        std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) { return x.direction < y.direction; });
        return out;
    }

    /// The edge joining `from` and `to`, oriented from -> to.
    std::optional<Edge> find_edge(const std::string& from, const std::string& to) const {
        for (const auto& e : edges_) {
            if (e.tail == from && e.head == to) return e;
            if (e.head == from && e.tail == to) return e.reversed();
        }
        return std::nullopt;
    }

private:
    void validate() {
        if (points_.empty()) throw Error(ErrorCode::MalformedGraph, "graph has no fixed points");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const auto& p = points_[i];
            if (!index_.emplace(p.id, i).second)
                throw Error(ErrorCode::MalformedGraph, "duplicate fixed point id '" + p.id + "'");
            for (const auto& c : p.image)
                if (c.degree() > 1)
                    throw Error(ErrorCode::MalformedGraph, "moment image of '" + p.id + "' is not affine in l1, l2");
        }
        std::set<EdgeKey> seen;
        std::map<std::string, std::size_t> degree;
        for (const auto& e : edges_) {
            if (!contains(e.tail) || !contains(e.head))
                throw Error(ErrorCode::NoSuchFixedPoint, "edge " + e.tail + "-" + e.head + " has unknown endpoint");
            if (e.tail == e.head) throw Error(ErrorCode::MalformedEdge, "loop at '" + e.tail + "'");
            if (e.direction.size() != 2)
                throw Error(ErrorCode::MalformedEdge, "edge direction must have 2 components");
            if (!is_primitive(e.direction))
                throw Error(ErrorCode::MalformedEdge,
                            "edge " + e.tail + "-" + e.head + " direction " + to_string(e.direction) + " not primitive");
            if (!seen.insert(edge_key(e)).second)
                throw Error(ErrorCode::MalformedGraph, "duplicate edge " + e.tail + "-" + e.head);
            auto a = area_factor(point(e.tail).image, point(e.head).image, e.direction);
            if (!a)
                throw Error(ErrorCode::MalformedEdge,
                            "moment difference along " + e.tail + "-" + e.head + " not parallel to direction");
            for (const auto& [l1v, l2v] : kAreaSamples)
                if (a->eval(l1v, l2v) <= 0)
                    throw Error(ErrorCode::MalformedEdge, "sphere " + e.tail + "-" + e.head + " has non-positive area " +
                                                              a->pretty() + " at (" + to_string(l1v) + "," +
                                                              to_string(l2v) + ")");
            ++degree[e.tail];
            ++degree[e.head];
        }
        valence_ = degree[points_.front().id];
        for (const auto& p : points_)
            if (degree[p.id] != valence_ || valence_ == 0)
                throw Error(ErrorCode::MalformedGraph, "fixed point '" + p.id + "' has " +
                                                           std::to_string(degree[p.id]) + " edges, expected " +
                                                           std::to_string(valence_));
    }

    std::vector<FixedPoint> points_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> index_;
    std::size_t valence_ = 0;
};

/// Tolman's six-dimensional example: six fixed points, nine invariant
/// spheres, for 0 < l1 < l2. Point x_ij sits at (i, j) when (l1, l2) = (1, 2).
inline GKMGraph tolman_graph() {
    const ParamPoly zero;
    std::vector<FixedPoint> pts{
        {"x00", {zero, zero}},
        {"x40", {ParamPoly::linear(2, 1), zero}},
        {"x11", {ParamPoly::linear(1, 0), ParamPoly::linear(1, 0)}},
        {"x21", {ParamPoly::linear(0, 1), ParamPoly::linear(1, 0)}},
        {"x03", {zero, ParamPoly::linear(1, 1)}},
        {"x13", {ParamPoly::linear(1, 0), ParamPoly::linear(1, 1)}},
    };
    std::vector<Edge> edges{
        {"x00", "x40", {1, 0}},  {"x00", "x03", {0, 1}},  {"x00", "x11", {1, 1}},
        {"x11", "x21", {1, 0}},  {"x11", "x13", {0, 1}},  {"x21", "x03", {-1, 1}},
        {"x21", "x40", {2, -1}}, {"x03", "x13", {1, 0}},  {"x13", "x40", {1, -1}},
    };
    return GKMGraph(std::move(pts), std::move(edges));
}

}  // namespace tolman
