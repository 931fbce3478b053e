#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tolman/gkm.hpp"
#include "tolman/jupp.hpp"
#include "tolman/kahler_cone.hpp"
#include "tolman/localization.hpp"
#include "tolman/projbundle.hpp"
#include "tolman/toric.hpp"

// JSON encodings. All numbers that may be rational are written as "p/q"
// strings; objects use nlohmann's sorted keys so output is canonical.

namespace tolman {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

/// [{"i":..,"j":..,"c":"p/q"}, ...] in ascending (i, j).
inline json poly_to_json(const ParamPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"i", e.first}, {"j", e.second}, {"c", to_string(c)}});
    return out;
}

inline ParamPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "ParamPoly must be a list of terms");
    ParamPoly p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c"))
            throw Error(ErrorCode::ParseError, "ParamPoly term needs i, j, c: " + t.dump());
        p.add_term(t.at("i").get<int>(), t.at("j").get<int>(), rational_from_json(t.at("c")));
    }
    return p;
}

inline json graph_to_json(const GKMGraph& g) {
    json pts = json::array(), edges = json::array();
    for (const auto& p : g.points())
        pts.push_back({{"id", p.id}, {"image", json::array({poly_to_json(p.image[0]), poly_to_json(p.image[1])})}});
    for (const auto& e : g.edges()) edges.push_back({{"tail", e.tail}, {"head", e.head}, {"dir", e.direction}});
    return {{"points", pts}, {"edges", edges}};
}

inline GKMGraph graph_from_json(const json& j) {
    try {
        std::vector<FixedPoint> pts;
        for (const auto& p : j.at("points")) {
            const auto& img = p.at("image");
            if (!img.is_array() || img.size() != 2) throw Error(ErrorCode::ParseError, "image must be a pair");
            pts.push_back({p.at("id").get<std::string>(), {poly_from_json(img[0]), poly_from_json(img[1])}});
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back(
                {e.at("tail").get<std::string>(), e.at("head").get<std::string>(), e.at("dir").get<IntVec>()});
        return GKMGraph(std::move(pts), std::move(edges));
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("GKM graph JSON: ") + ex.what());
    }
}

inline json polytope_to_json(const DelzantPolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices)
        verts.push_back(json::array({poly_to_json(v[0]), poly_to_json(v[1]), poly_to_json(v[2])}));
    json out = {{"name", p.name}, {"vertices", verts}};
    if (p.edges) {
        json edges = json::array();
        for (const auto& [a, b] : *p.edges) edges.push_back({a, b});
        out["edges"] = edges;
    }
    return out;
}

inline DelzantPolytope polytope_from_json(const json& j) {
    try {
        DelzantPolytope p;
        p.name = j.value("name", "");
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::ParseError, "vertex must have 3 coordinates");
            p.vertices.push_back({poly_from_json(v[0]), poly_from_json(v[1]), poly_from_json(v[2])});
        }
        if (j.contains("edges")) {
            std::vector<VertexPair> edges;
            for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
            p.edges = edges;
        }
        return p;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("polytope JSON: ") + ex.what());
    }
}

inline json ring_to_json(const RingElement& x) {
    json coords = json::array();
    for (const auto& c : x.coords()) coords.push_back(c.str());
    return {{"degree", x.degree()}, {"coords", coords}, {"text", x.pretty()}};
}

inline json trilinear_to_json(const SymmetricTrilinear& t) {
    json entries = json::array();
    for (int i = 0; i < 2; ++i) {
        json plane = json::array();
        for (int j = 0; j < 2; ++j) plane.push_back({to_string(t.at(i, j, 0)), to_string(t.at(i, j, 1))});
        entries.push_back(plane);
    }
    return {{"basis", t.basis()}, {"entries", entries}};
}

inline json jupp_to_json(const JuppInvariants& inv) {
    return {{"trilinear", trilinear_to_json(inv.trilinear)},
            {"w2", inv.w2},
            {"p1_pairings", json::array({to_string(inv.p1_pairings[0]), to_string(inv.p1_pairings[1])})}};
}

inline json edge_to_json(const Edge& e) { return {{"tail", e.tail}, {"head", e.head}, {"dir", e.direction}}; }

inline json contribution_to_json(const FixedPointContribution& c, const GKMGraph& g) {
    const auto& img = g.point(c.point).image;
    return {{"point", c.point},
            {"coordinates", json::array({img[0].pretty(), img[1].pretty()})},
            {"hamiltonian", c.hamiltonian.pretty()},
            {"weights", c.weights},
            {"weight_product", c.weight_product}};
}

inline json kahler_to_json(const KahlerCertificate& k) {
    auto c = curve_invariants(k.splitting);
    return {{"verdict", to_string(k.verdict)},
            {"certificate",
             {{"n", k.splitting.n},
              {"m", c.m},
              {"c1_on_S", c.c1_pairing},
              {"eta_on_S", c.eta_pairing},
              {"xi_on_S", c.xi_pairing},
              {"class_on_S", to_string(k.value)}}}};
}

}  // namespace tolman
