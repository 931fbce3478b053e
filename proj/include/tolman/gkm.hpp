#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tolman/gkm_graph.hpp"

namespace tolman {

/// Weights of the subcircle `s` at fixed point `id`, one per incident edge,
/// in the canonical (lexicographic direction) order of GKMGraph::outgoing.
inline std::vector<std::int64_t> restrict_weights(const GKMGraph& g, const CircleAction& s, const std::string& id) {
    std::vector<std::int64_t> w;
    for (const auto& e : g.outgoing(id)) w.push_back(s.weight(e.direction));
    return w;
}

/// Morse index of the Hamiltonian at a fixed point: twice the number of
/// negative weights.
inline int fixed_point_index(const std::vector<std::int64_t>& weights) {
    int negative = 0;
    for (auto w : weights) {
        if (w == 0) throw Error(ErrorCode::DegenerateWeight, "zero weight: fixed point is not isolated");
        if (w < 0) ++negative;
    }
    return 2 * negative;
}

/// b_0 .. b_{2n}: b_k is the number of fixed points of index k.
inline std::vector<int> betti_numbers(const GKMGraph& g, const CircleAction& s) {
    std::vector<int> betti(2 * g.valence() + 1, 0);
    for (const auto& p : g.points()) {
        try {
            ++betti[fixed_point_index(restrict_weights(g, s, p.id))];
        } catch (const Error& err) {
            throw Error(err.code(), err.detail() + " at " + p.id);
        }
    }
    return betti;
}

/// Hamiltonian of the subcircle at a fixed point: a*phi_1 + b*phi_2.
inline ParamPoly hamiltonian(const GKMGraph& g, const CircleAction& s, const std::string& id) {
    const auto& img = g.point(id).image;
    return img[0] * Rational(s.a) + img[1] * Rational(s.b);
}

/// Symplectic area of the sphere over `e`: the factor a with
/// head - tail = a * direction.
inline ParamPoly sphere_area(const GKMGraph& g, const Edge& e) {
    auto a = area_factor(g.point(e.tail).image, g.point(e.head).image, e.direction);
    if (!a) throw Error(ErrorCode::MalformedEdge, "moment difference along " + e.tail + "-" + e.head + " not collinear");
    return *a;
}

/// <c_1, S> from the weights at the two poles of S: (sum of weights at the
/// minimum - sum at the maximum) / |weight of s along S|.
inline Rational c1_on_sphere(const GKMGraph& g, const Edge& e, const CircleAction& s) {
    std::int64_t w = s.weight(e.direction);
    if (w == 0)
        throw Error(ErrorCode::EdgeFixedPointwise,
                    "sphere " + e.tail + "-" + e.head + " is fixed pointwise by (" + std::to_string(s.a) + "," +
                        std::to_string(s.b) + ")");
    // The Hamiltonian increases from tail to head iff w > 0.
    const std::string& min_pt = w > 0 ? e.tail : e.head;
    const std::string& max_pt = w > 0 ? e.head : e.tail;
    auto sum = [&](const std::string& id) {
        auto ws = restrict_weights(g, s, id);
        return std::accumulate(ws.begin(), ws.end(), std::int64_t{0});
    };
    return Rational(sum(min_pt) - sum(max_pt)) / Rational(std::llabs(w));
}

inline EdgeValues c1_on_spheres(const GKMGraph& g, const CircleAction& s) {
    EdgeValues out;
    for (const auto& e : g.edges()) out[edge_key(e)] = c1_on_sphere(g, e, s);
    return out;
}

struct CoprimeViolation {
    std::string point;
    std::int64_t first = 0;
    std::optional<std::int64_t> second;  // absent when a single weight is in {-1, 0, 1}
    std::string reason;
};

struct CoprimeReport {
    bool coprime = true;
    std::vector<CoprimeViolation> violations;  // all offenders, in point order
};

/// A subcircle is coprime when at every fixed point its weights are pairwise
/// coprime and none of them is -1, 0 or 1.
inline CoprimeReport is_coprime_action(const GKMGraph& g, const CircleAction& s) {
    if (s.a == 0 || s.b == 0)
        throw Error(ErrorCode::AxisSubcircle,
                    "coprime criterion needs a, b nonzero, got (" + std::to_string(s.a) + "," + std::to_string(s.b) + ")");
    CoprimeReport report;
    for (const auto& p : g.points()) {
        auto ws = restrict_weights(g, s, p.id);
        for (auto w : ws)
            if (std::llabs(w) <= 1) report.violations.push_back({p.id, w, std::nullopt, "weight in {-1,0,1}"});
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j)
                if (std::gcd(ws[i], ws[j]) != 1)
                    report.violations.push_back(
                        {p.id, ws[i], ws[j], "gcd " + std::to_string(std::gcd(ws[i], ws[j]))});
    }
    report.coprime = report.violations.empty();
    return report;
}

struct IsotropySphere {
    Edge edge;
    std::int64_t order;  // order of the stabiliser of a generic point
};

/// Spheres with stabiliser of order >= 2 among the invariant spheres.
inline std::vector<IsotropySphere> isotropy_spheres(const GKMGraph& g, const CircleAction& s) {
    auto report = is_coprime_action(g, s);
    if (!report.coprime) {
        const auto& v = report.violations.front();
        throw Error(ErrorCode::NotCoprime, "action (" + std::to_string(s.a) + "," + std::to_string(s.b) +
                                               ") is not coprime at " + v.point + " (" + v.reason + ")");
    }
    std::vector<IsotropySphere> out;
    for (const auto& e : g.edges()) {
        std::int64_t order = std::llabs(s.weight(e.direction));
        if (order >= 2) out.push_back({e, order});
    }
    return out;
}

/// Pairing of c_2 with a degree-2 class given by its values on the spheres;
/// c_2 is Poincare dual to the sum of the invariant spheres.
inline Rational pair_with_c2(const GKMGraph& g, const EdgeValues& values) {
    Rational total = 0;
    for (const auto& e : g.edges()) {
        auto it = values.find(edge_key(e));
        if (it == values.end())
            throw Error(ErrorCode::IncompleteCocycle, "no value for sphere " + e.tail + "-" + e.head);
        total += it->second;
    }
    return total;
}

/// Classes xi', eta' with [omega] = l1 xi' + l2 eta': the l1 and l2
/// coefficients of every sphere area.
struct OmegaDecomposition {
    EdgeValues xi;
    EdgeValues eta;
};

inline OmegaDecomposition omega_decomposition(const GKMGraph& g) {
    OmegaDecomposition d;
    for (const auto& e : g.edges()) {
        ParamPoly area = sphere_area(g, e);
        if (!area.is_homogeneous(1))
            throw Error(ErrorCode::MalformedEdge, "area of " + e.tail + "-" + e.head + " is not linear in l1, l2");
        d.xi[edge_key(e)] = area.coefficient(1, 0);
        d.eta[edge_key(e)] = area.coefficient(0, 1);
    }
    return d;
}

/// Coordinates (u, v) with values = u * first + v * second on every sphere,
/// or nullopt when no such combination exists.
inline std::optional<std::pair<Rational, Rational>> class_coordinates(const EdgeValues& values, const EdgeValues& first,
                                                                      const EdgeValues& second) {
    // Pick two spheres on which (first, second) are independent, solve, then
    // verify on all of them.
    std::vector<EdgeKey> keys;
    for (const auto& [k, v] : values) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            const Rational f1 = first.at(keys[i]), s1 = second.at(keys[i]);
            const Rational f2 = first.at(keys[j]), s2 = second.at(keys[j]);
            Rational det = f1 * s2 - f2 * s1;
            if (det == 0) continue;
            const Rational y1 = values.at(keys[i]), y2 = values.at(keys[j]);
            Rational u = (y1 * s2 - y2 * s1) / det;
            Rational v = (f1 * y2 - f2 * y1) / det;
            for (const auto& k : keys)
                if (u * first.at(k) + v * second.at(k) != values.at(k)) return std::nullopt;
            return std::pair{u, v};
        }
    }
    return std::nullopt;
}

}  // namespace tolman
