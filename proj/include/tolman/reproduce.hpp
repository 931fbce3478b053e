#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "tolman/serialization.hpp"

namespace tolman {

struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

namespace detail {

inline std::string join(std::vector<std::string> parts, bool sort_first = false) {
    if (sort_first) std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + "}";
}

inline std::string int_multiset(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::string> s;
    for (auto x : v) s.push_back(std::to_string(x));
    return join(s);
}

class CheckList {
public:
    void add(std::string name, std::string expected, const std::function<std::string()>& compute) {
        std::string got;
        try {
            got = compute();
        } catch (const std::exception& ex) {
            got = std::string("error: ") + ex.what();
        }
        bool pass = got == expected;
        checks_.push_back({std::move(name), std::move(expected), std::move(got), pass});
    }
    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

}  // namespace detail

/// Every reference value the toolkit reproduces, recomputed from scratch.
inline std::vector<Check> reproduce_all() {
    using detail::int_multiset;
    detail::CheckList c;
    const auto g = tolman_graph();
    const CircleAction s21{2, 1};
    const BundleData E{-1, -1};
    auto edge = [&](const char* from, const char* to) { return *g.find_edge(from, to); };

    // Tolman's GKM graph
    c.add("graph: fixed points / spheres", "6/9",
          [&] { return std::to_string(g.points().size()) + "/" + std::to_string(g.edges().size()); });
    c.add("graph: x00-x40 direction and area", "(1,0) 2*l1 + l2", [&] {
        auto e = edge("x00", "x40");
        return to_string(e.direction) + " " + sphere_area(g, e).pretty();
    });
    c.add("graph: x11-x21 direction and area", "(1,0) -l1 + l2", [&] {
        auto e = edge("x11", "x21");
        return to_string(e.direction) + " " + sphere_area(g, e).pretty();
    });
    c.add("graph: area x00-x03", "l1 + l2", [&] { return sphere_area(g, edge("x00", "x03")).pretty(); });
    c.add("graph: area x03-x13", "l1", [&] { return sphere_area(g, edge("x03", "x13")).pretty(); });
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {7, 2}, {3, 5}})
        c.add("weights at x00 for (" + std::to_string(a) + "," + std::to_string(b) + ") = {a,b,a+b}",
              int_multiset({a, b, a + b}), [&, a = a, b = b] { return int_multiset(restrict_weights(g, {a, b}, "x00")); });
    c.add("weights at x40 for (2,1)", int_multiset({-2, -1, -3}),
          [&] { return int_multiset(restrict_weights(g, s21, "x40")); });
    c.add("rank H^2 = b_2 for (2,1)", "2", [&] { return std::to_string(betti_numbers(g, s21)[2]); });

    // c1 on the invariant spheres
    c.add("c1 on x00-x40 for (2,1)", "6", [&] { return to_string(c1_on_sphere(g, edge("x00", "x40"), s21)); });
    c.add("c1 on x11-x21 for (2,1)", "0", [&] { return to_string(c1_on_sphere(g, edge("x11", "x21"), s21)); });
    c.add("c1 on all nine spheres", int_multiset({6, 4, 4, 2, 2, 2, 2, 2, 0}), [&] {
        std::vector<std::int64_t> v;
        for (const auto& [k, val] : c1_on_spheres(g, s21)) v.push_back(static_cast<std::int64_t>(numerator_of(val)));
        return int_multiset(v);
    });
    c.add("isotropy spheres of coprime (7,2)", "9", [&] { return std::to_string(isotropy_spheres(g, {7, 2}).size()); });
    c.add("c1 >= 0 on isotropy spheres of (7,2)", "true", [&] {
        for (const auto& sp : isotropy_spheres(g, {7, 2}))
            if (c1_on_sphere(g, sp.edge, {7, 2}) < 0) return std::string("false");
        return std::string("true");
    });
    c.add("c1 = 2 eta' + 2 xi'", "(2,2)", [&] {
        auto d = omega_decomposition(g);
        auto uv = class_coordinates(c1_on_spheres(g, s21), d.eta, d.xi);
        return uv ? "(" + to_string(uv->first) + "," + to_string(uv->second) + ")" : std::string("none");
    });
    c.add("c2 . eta'", "6", [&] { return to_string(pair_with_c2(g, omega_decomposition(g).eta)); });
    c.add("c2 . xi'", "6", [&] { return to_string(pair_with_c2(g, omega_decomposition(g).xi)); });

    // Localization
    c.add("c1^3 of Tolman's manifold", "64",
          [&] { return to_string(abbv_chern_number(g, s21, ChernMonomial::C1Cubed)); });
    c.add("DH volume for (2,1)", "2*l1^3 + 3*l1^2*l2 + 3*l1*l2^2", [&] { return dh_volume(g, s21).pretty(); });
    c.add("DH table: H(p) for (2,1)", "{0,3*l1,l1 + 2*l2,l1 + l2,3*l1 + l2,4*l1 + 2*l2}", [&] {
        std::vector<std::string> parts;
        for (const auto& id : {"x00", "x11", "x21", "x03", "x13", "x40"}) parts.push_back(hamiltonian(g, s21, id).pretty());
        return detail::join(parts);
    });
    c.add("DH table: weight products for (2,1)", "{6,-6,6,-2,2,-6}", [&] {
        std::vector<std::string> parts;
        auto data = fixed_point_data(g, s21);
        for (const auto& id : {"x00", "x11", "x21", "x03", "x13", "x40"})
            for (const auto& d : data)
                if (d.point == id) parts.push_back(std::to_string(d.weight_product));
        return detail::join(parts);
    });
    c.add("eta'^3 = 0", "0", [&] { return to_string(cubic_form_from_gkm(g, s21).at(0, 0, 0)); });

    // Projective bundles
    c.add("xi^2 at (-1,-1)", "eta^2 + eta*xi", [&] { return cup(RingElement::xi(), RingElement::xi(), E).pretty(); });
    c.add("(2 eta + 2 xi)^3 at (-1,-1)", "64", [&] {
        auto y = RingElement::linear(2, 2);
        return integrate(cup(cup(y, y, E), y, E)).str();
    });
    c.add("F(a eta + b xi) = b(3a^2+3ab+2b^2) on |a|,|b| <= 5", "true", [&] {
        for (int a = -5; a <= 5; ++a)
            for (int b = -5; b <= 5; ++b)
                if (cubic_form(a, b, E) != Integer(b * (3 * a * a + 3 * a * b + 2 * b * b))) return std::string("false");
        return std::string("true");
    });
    c.add("F(eta) = 0", "0", [&] { return cubic_form(1, 0, E).str(); });
    c.add("c1(P(E))", "2*eta + 2*xi", [&] { return total_chern(E).c1.pretty(); });
    c.add("c2(P(E)) = 6 xi^2 - 6 eta^2", (Integer(6) * cup(RingElement::xi(), RingElement::xi(), E) -
                                          RingElement(4, {6, 0})).pretty(),
          [&] { return total_chern(E).c2.pretty(); });
    c.add("c3(P(E)) = 6 xi^2 eta", (Integer(6) * cup(cup(RingElement::xi(), RingElement::xi(), E), RingElement::eta(), E)).pretty(),
          [&] { return total_chern(E).c3.pretty(); });
    c.add("c1(P(V)) at (0,0)", "3*eta + 2*xi", [&] { return total_chern({0, 0}).c1.pretty(); });
    c.add("c1^3(P(V)) at (-1,-1)", "64", [&] { return c1_cubed(E).str(); });
    c.add("c1^3(P(V)) at (-1,0)", "56", [&] { return c1_cubed({-1, 0}).str(); });
    c.add("p1(P(E))", "8*eta^2", [&] { return p1_and_w2(E).p1.pretty(); });
    c.add("w2(P(E)) and c1 even", "(0,0) true", [&] {
        auto pw = p1_and_w2(E);
        return "(" + std::to_string(pw.w2[0]) + "," + std::to_string(pw.w2[1]) + ") " + (pw.c1_even ? "true" : "false");
    });
    c.add("c1 even at (0,0)", "false", [&] { return std::string(p1_and_w2({0, 0}).c1_even ? "true" : "false"); });
    c.add("c2.eta, c2.xi of P(E)", "(6,6)", [&] {
        auto [ce, cx] = c2_pairings(E);
        return "(" + ce.str() + "," + cx.str() + ")";
    });
    c.add("Jupp: M_T vs P(E) under eta'->eta, xi'->xi", "true", [&] {
        auto r = jupp_compare(gkm_jupp_invariants(g, s21), bundle_jupp_invariants(E), BasisMap{{{1, 0}, {0, 1}}});
        return std::string(r.equivalent ? "true" : "false");
    });

    // Toric pieces
    const auto polys = builtin_polytopes();
    c.add("tilde top edge (l1,l1,l1)-(l2,l1,l1) length", "-l1 + l2",
          [&] { return edge_integral_length(polys.tilde, 3, 5).pretty(); });
    c.add("tilde non-horizontal edge lengths", "{l1,l1,l1}", [&] {
        return detail::join({edge_integral_length(polys.tilde, 0, 3).pretty(),
                             edge_integral_length(polys.tilde, 1, 5).pretty(),
                             edge_integral_length(polys.tilde, 2, 4).pretty()});
    });
    c.add("tilde vertex (l2,l1,l1) image", "(l2,l1)", [&] {
        auto img = polys.tilde_projection.apply(polys.tilde.vertices[5]);
        return "(" + img[0].pretty() + "," + img[1].pretty() + ")";
    });
    c.add("glued fixed points", "{x00,x03,x11,x13,x21,x40}", [&] {
        auto r = glue_check(project_fixed_data(polys.hat, polys.hat_projection),
                            project_fixed_data(polys.tilde, polys.tilde_projection));
        std::vector<std::string> ids;
        for (const auto& m : r.matches) ids.push_back(m.point);
        return r.ok ? detail::join(ids, true) : "mismatch: " + r.mismatches.front();
    });

    // Kahler cone obstruction
    c.add("curve invariants at n = 2", "m=5 c1=-2 eta=1 xi=-2", [&] {
        auto ci = curve_invariants({2});
        return "m=" + std::to_string(ci.m) + " c1=" + std::to_string(ci.c1_pairing) +
               " eta=" + std::to_string(ci.eta_pairing) + " xi=" + std::to_string(ci.xi_pairing);
    });
    c.add("omega_{1,2} on S", "0", [&] { return to_string(evaluate_class_on_curve(1, 2, {2})); });
    c.add("omega_{1,2} verdict", "Obstructed 0", [&] {
        auto k = kahler_obstruction(1, 2);
        return to_string(k.verdict) + " " + to_string(k.value);
    });
    c.add("omega_{1,3} verdict", "NotObstructedByThisTest",
          [&] { return to_string(kahler_obstruction(1, 3).verdict); });
    return c.take();
}

inline json checks_to_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& ch : checks)
        out.push_back({{"name", ch.name}, {"expected", ch.expected}, {"got", ch.got}, {"pass", ch.pass}});
    return out;
}

}  // namespace tolman
