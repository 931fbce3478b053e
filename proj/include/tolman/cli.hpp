#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tolman/reproduce.hpp"

// Command-line front end. Every subcommand prints one JSON document on the
// output stream. Exit codes: 0 success, 1 computation error (JSON error
// object on the output stream), 2 usage error.

namespace tolman::cli {

namespace detail {

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + ex.what());
    }
}

inline GKMGraph load_graph(const std::string& source) {
    if (source.empty() || source == "tolman") return tolman_graph();
    return graph_from_json(read_json_file(source));
}

inline DelzantPolytope load_polytope(const std::string& source) {
    auto builtin = builtin_polytopes();
    if (source == "tolman-hat") return builtin.hat;
    if (source == "tolman-tilde") return builtin.tilde;
    return polytope_from_json(read_json_file(source));
}

inline BasisMap parse_basis_map(const std::string& text) {
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(static_cast<std::int64_t>(parse_integer(item)));
    if (v.size() != 4) throw Error(ErrorCode::ParseError, "--q needs four comma-separated integers q00,q01,q10,q11");
    return {{{v[0], v[1]}, {v[2], v[3]}}};
}

inline json basis_map_to_json(const BasisMap& q) { return json::array({q[0], q[1]}); }

inline json jupp_report_to_json(const JuppReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"equivalent", r.equivalent}, {"checks", checks}};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact localization and intersection-ring computations for Tolman's manifold", "tolman"};
    app.require_subcommand(1);

    std::string graph_source = "tolman";
    std::int64_t a = 2, b = 1;
    std::string point, monomial = "c1^3", l1_text, l2_text, q_text = "1,0,0,1";
    std::string hat_source = "tolman-hat", tilde_source = "tolman-tilde";
    std::int64_t k1 = -1, k2 = -1, n = 2;
    bool search = false;

    auto add_action = [&](CLI::App* sub) {
        sub->add_option("--a", a, "first component of the subcircle (a, b)")->required();
        sub->add_option("--b", b, "second component of the subcircle (a, b)")->required();
        sub->add_option("--graph", graph_source, "GKM graph JSON file, or 'tolman'");
    };

    auto* graph_cmd = app.add_subcommand("graph", "print and validate a GKM graph");
    graph_cmd->add_option("--graph", graph_source, "GKM graph JSON file, or 'tolman'");

    auto* weights_cmd = app.add_subcommand("weights", "weights of a subcircle at a fixed point");
    add_action(weights_cmd);
    weights_cmd->add_option("--point", point, "fixed point id")->required();

    auto* betti_cmd = app.add_subcommand("betti", "fixed point indices and Betti numbers");
    add_action(betti_cmd);

    auto* coprime_cmd = app.add_subcommand("coprime", "is the subcircle action coprime?");
    add_action(coprime_cmd);

    auto* spheres_cmd = app.add_subcommand("spheres", "invariant spheres: areas, c1 values, isotropy");
    add_action(spheres_cmd);

    auto* chern_cmd = app.add_subcommand("chern", "Chern number by fixed-point localization");
    add_action(chern_cmd);
    chern_cmd->add_option("--monomial", monomial, "c1^3, c1c2 or c3");

    auto* dh_cmd = app.add_subcommand("dh-volume", "symplectic volume polynomial by Duistermaat-Heckman");
    add_action(dh_cmd);
    dh_cmd->add_option("--l1", l1_text, "evaluate at l1 (p/q)");
    dh_cmd->add_option("--l2", l2_text, "evaluate at l2 (p/q)");

    auto* ring_cmd = app.add_subcommand("ring", "cohomology ring data of P(V) over CP^2");
    ring_cmd->add_option("--k1", k1, "c1(V) = k1 x")->required();
    ring_cmd->add_option("--k2", k2, "c2(V) = k2 x^2")->required();

    auto* jupp_cmd = app.add_subcommand("jupp", "compare the GKM space with P(V) via Jupp's invariants");
    jupp_cmd->add_option("--k1", k1, "c1(V) of the bundle side (default -1)");
    jupp_cmd->add_option("--k2", k2, "c2(V) of the bundle side (default -1)");
    jupp_cmd->add_option("--a", a, "subcircle used for localization (default 2)");
    jupp_cmd->add_option("--b", b, "subcircle used for localization (default 1)");
    jupp_cmd->add_option("--graph", graph_source, "GKM graph JSON file, or 'tolman'");
    jupp_cmd->add_option("--q", q_text, "basis map (eta',xi') -> (eta,xi) as q00,q01,q10,q11 (columns are images)");
    jupp_cmd->add_flag("--search", search, "also search unimodular maps with entries in [-3,3] (heuristic)");

    auto* toric_cmd = app.add_subcommand("toric-glue", "check that the toric pieces glue to the GKM fixed-point data");
    toric_cmd->add_option("--hat", hat_source, "upper piece: 'tolman-hat' or polytope JSON file");
    toric_cmd->add_option("--tilde", tilde_source, "lower piece: 'tolman-tilde' or polytope JSON file");

    auto* kahler_cmd = app.add_subcommand("kahler-cone", "curve obstruction for the class l1 xi + l2 eta");
    kahler_cmd->add_option("--l1", l1_text, "l1 as p/q")->required();
    kahler_cmd->add_option("--l2", l2_text, "l2 as p/q")->required();
    kahler_cmd->add_option("--n", n, "splitting index n >= 2 (default 2)");

    auto* reproduce_cmd = app.add_subcommand("reproduce-all", "recompute every reference value and compare");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    json result;
    int status = 0;
    try {
        if (graph_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            result = {{"valid", true}, {"valence", g.valence()}, {"graph", graph_to_json(g)}};
        } else if (weights_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            json dirs = json::array();
            for (const auto& e : g.outgoing(point)) dirs.push_back(e.direction);
            result = {{"point", point}, {"directions", dirs}, {"weights", restrict_weights(g, {a, b}, point)}};
        } else if (betti_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            json indices = json::object();
            for (const auto& p : g.points()) indices[p.id] = fixed_point_index(restrict_weights(g, {a, b}, p.id));
            result = {{"betti", betti_numbers(g, {a, b})}, {"indices", indices}};
        } else if (coprime_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            auto r = is_coprime_action(g, {a, b});
            json violations = json::array();
            for (const auto& v : r.violations) {
                json w = json::array({v.first});
                if (v.second) w.push_back(*v.second);
                violations.push_back({{"point", v.point}, {"weights", w}, {"reason", v.reason}});
            }
            result = {{"coprime", r.coprime}, {"violations", violations}};
        } else if (spheres_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            auto omega = omega_decomposition(g);
            json rows = json::array();
            const CircleAction s{a, b};
            for (const auto& e : g.edges()) {
                json row = edge_to_json(e);
                row["area"] = sphere_area(g, e).pretty();
                row["eta_prime"] = to_string(omega.eta.at(edge_key(e)));
                row["xi_prime"] = to_string(omega.xi.at(edge_key(e)));
                row["weight"] = s.weight(e.direction);
                if (s.weight(e.direction) != 0) row["c1"] = to_string(c1_on_sphere(g, e, s));
                rows.push_back(row);
            }
            result = {{"spheres", rows}};
            auto coprime = is_coprime_action(g, s);
            if (coprime.coprime) {
                json iso = json::array();
                for (const auto& sp : isotropy_spheres(g, s))
                    iso.push_back({{"tail", sp.edge.tail}, {"head", sp.edge.head}, {"order", sp.order}});
                result["isotropy_spheres"] = iso;
            } else {
                result["isotropy_spheres"] = nullptr;
                result["isotropy_note"] = "action is not coprime";
            }
        } else if (chern_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            auto m = parse_chern_monomial(monomial);
            result = {{"monomial", std::string(to_string(m))}, {"value", to_string(abbv_chern_number(g, {a, b}, m))}};
        } else if (dh_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            const CircleAction s{a, b};
            auto vol = dh_volume(g, s);
            json table = json::array();
            for (const auto& c : fixed_point_data(g, s)) table.push_back(contribution_to_json(c, g));
            result = {{"volume", poly_to_json(vol)}, {"text", vol.pretty()}, {"contributions", table}};
            if (!l1_text.empty() || !l2_text.empty()) {
                if (l1_text.empty() || l2_text.empty())
                    throw Error(ErrorCode::ParseError, "--l1 and --l2 must be given together");
                result["value"] = to_string(vol.eval(parse_rational(l1_text), parse_rational(l2_text)));
            }
        } else if (ring_cmd->parsed()) {
            const BundleData v{k1, k2};
            auto c = total_chern(v);
            auto pw = p1_and_w2(v);
            auto [ce, cx] = c2_pairings(v);
            auto inv = bundle_jupp_invariants(v);
            result = {{"k1", k1},
                      {"k2", k2},
                      {"c1", ring_to_json(c.c1)},
                      {"c2", ring_to_json(c.c2)},
                      {"c3", ring_to_json(c.c3)},
                      {"p1", ring_to_json(pw.p1)},
                      {"w2", pw.w2},
                      {"c1_even", pw.c1_even},
                      {"c1_cubed", c1_cubed(v).str()},
                      {"c2_pairings", {{"eta", ce.str()}, {"xi", cx.str()}}},
                      {"cubic_form", {{"text", "F(a*eta + b*xi) = " + bundle_cubic(v).pretty()},
                                      {"coefficients", poly_to_json(bundle_cubic(v))},
                                      {"variables", "l1 = a (eta coordinate), l2 = b (xi coordinate)"}}},
                      {"jupp", jupp_to_json(inv)}};
        } else if (jupp_cmd->parsed()) {
            auto g = detail::load_graph(graph_source);
            auto gkm_inv = gkm_jupp_invariants(g, {a, b});
            auto bundle_inv = bundle_jupp_invariants({k1, k2});
            auto q = detail::parse_basis_map(q_text);
            result = {{"gkm", jupp_to_json(gkm_inv)},
                      {"bundle", jupp_to_json(bundle_inv)},
                      {"q", detail::basis_map_to_json(q)},
                      {"comparison", detail::jupp_report_to_json(jupp_compare(gkm_inv, bundle_inv, q))}};
            if (search) {
                auto found = find_jupp_equivalence(gkm_inv, bundle_inv);
                result["search"] = {{"bound", 3},
                                    {"heuristic", true},
                                    {"found", found ? detail::basis_map_to_json(*found) : json(nullptr)}};
            }
        } else if (toric_cmd->parsed()) {
            auto builtin = builtin_polytopes();
            auto hat = detail::load_polytope(hat_source);
            auto tilde = detail::load_polytope(tilde_source);
            auto hat_data = project_fixed_data(hat, builtin.hat_projection);
            auto tilde_data = project_fixed_data(tilde, builtin.tilde_projection);
            auto r = glue_check(hat_data, tilde_data);
            json matches = json::array();
            for (const auto& m : r.matches)
                matches.push_back({{"source", m.source},
                                   {"vertex", m.vertex},
                                   {"image", json::array({m.image[0].pretty(), m.image[1].pretty()})},
                                   {"point", m.point},
                                   {"weights_match", m.weights_match}});
            result = {{"glued", r.ok}, {"matches", matches}, {"mismatches", r.mismatches}};
            if (!r.ok) status = 1;
        } else if (kahler_cmd->parsed()) {
            result = kahler_to_json(kahler_obstruction(parse_rational(l1_text), parse_rational(l2_text), {n}));
        } else if (reproduce_cmd->parsed()) {
            auto checks = reproduce_all();
            bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
            result = {{"command", "reproduce-all"},
                      {"inputs", json::object()},
                      {"results", {{"passed", std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; })},
                                   {"total", checks.size()}}},
                      {"checks", checks_to_json(checks)}};
            if (!all) status = 1;
        }
    } catch (const Error& e) {
        out << json{{"error", std::string(to_string(e.code()))}, {"message", e.detail()}}.dump(2) << "\n";
        return 1;
    }
    out << result.dump(2) << "\n";
    return status;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace tolman::cli
