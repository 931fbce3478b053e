#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tolman/localization.hpp"
#include "tolman/projbundle.hpp"

namespace tolman {

/// Diffeomorphism invariants of a simply connected six-manifold with
/// b_2 = 2, b_3 = 0 and torsion-free homology, on a chosen basis of H^2.
struct JuppInvariants {
    SymmetricTrilinear trilinear;
    std::array<int, 2> w2{};           // in H^2 / 2 H^2
    std::array<Rational, 2> p1_pairings;  // <p1, e0>, <p1, e1>
};

/// Invariants of P(V) on the basis (eta, xi).
inline JuppInvariants bundle_jupp_invariants(const BundleData& v) {
    JuppInvariants inv;
    inv.trilinear = trilinear_from_cubic(bundle_cubic(v), {"eta", "xi"});
    auto pw = p1_and_w2(v);
    inv.w2 = pw.w2;
    inv.p1_pairings = {Rational(integrate(cup(pw.p1, RingElement::eta(), v))),
                       Rational(integrate(cup(pw.p1, RingElement::xi(), v)))};
    return inv;
}

/// Invariants of a six-dimensional GKM space on the basis (eta', xi') read
/// off the sphere areas. c1 is recovered from its sphere values, and
/// p1 = c1^2 - 2 c2 is paired through the cubic form and the sphere sum.
inline JuppInvariants gkm_jupp_invariants(const GKMGraph& g, const CircleAction& s) {
    JuppInvariants inv;
    inv.trilinear = cubic_form_from_gkm(g, s);
    auto omega = omega_decomposition(g);
    auto c1 = class_coordinates(c1_on_spheres(g, s), omega.eta, omega.xi);
    if (!c1) throw Error(ErrorCode::MalformedGraph, "c1 is not a combination of eta', xi' on the spheres");
    const Vec2 c1v{c1->first, c1->second};
    for (int i = 0; i < 2; ++i) {
        if (!is_integral(c1v[i])) throw Error(ErrorCode::MalformedGraph, "c1 is not integral on (eta', xi')");
        Integer n = numerator_of(c1v[i]);
        inv.w2[i] = static_cast<int>(((n % 2) + 2) % 2);
    }
    const std::array<Rational, 2> c2_pair{pair_with_c2(g, omega.eta), pair_with_c2(g, omega.xi)};
    const Vec2 e0{1, 0}, e1{0, 1};
    inv.p1_pairings = {inv.trilinear(c1v, c1v, e0) - 2 * c2_pair[0], inv.trilinear(c1v, c1v, e1) - 2 * c2_pair[1]};
    return inv;
}

/// Integer matrix sending basis vector j of the first lattice to
/// sum_i q[i][j] f_i in the second.
using BasisMap = std::array<std::array<std::int64_t, 2>, 2>;

inline std::int64_t determinant(const BasisMap& q) { return q[0][0] * q[1][1] - q[0][1] * q[1][0]; }

struct JuppCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct JuppReport {
    bool equivalent = false;
    std::vector<JuppCheck> checks;  // cubic form, w2, p1
};

/// Does Q : H^2(first) -> H^2(second) carry the invariants of `first` to
/// those of `second`?
inline JuppReport jupp_compare(const JuppInvariants& first, const JuppInvariants& second, const BasisMap& q) {
    const auto det = determinant(q);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::NotUnimodular, "basis map has determinant " + std::to_string(det));
    auto image = [&](int j) { return Vec2{Rational(q[0][j]), Rational(q[1][j])}; };

    JuppReport report;
    JuppCheck cubic{"cubic_form", true, ""};
    for (int i = 0; i < 2 && cubic.pass; ++i)
        for (int j = 0; j < 2 && cubic.pass; ++j)
            for (int k = 0; k < 2 && cubic.pass; ++k) {
                Rational transported = second.trilinear(image(i), image(j), image(k));
                if (transported != first.trilinear.at(i, j, k)) {
                    cubic.pass = false;
                    cubic.detail = "F(" + std::to_string(i) + std::to_string(j) + std::to_string(k) + ") = " +
                                   to_string(first.trilinear.at(i, j, k)) + " but transported value is " +
                                   to_string(transported);
                }
            }

    JuppCheck w2{"w2", true, ""};
    for (int i = 0; i < 2; ++i) {
        std::int64_t transported = (q[i][0] * first.w2[0] + q[i][1] * first.w2[1]) % 2;
        if (((transported + 2) % 2) != second.w2[i]) {
            w2.pass = false;
            w2.detail = "component " + std::to_string(i) + " differs mod 2";
        }
    }

    JuppCheck p1{"p1", true, ""};
    for (int j = 0; j < 2; ++j) {
        Rational transported = q[0][j] * second.p1_pairings[0] + q[1][j] * second.p1_pairings[1];
        if (transported != first.p1_pairings[j]) {
            p1.pass = false;
            p1.detail = "<p1, e" + std::to_string(j) + "> = " + to_string(first.p1_pairings[j]) +
                        " but pulled-back value is " + to_string(transported);
        }
    }

    report.checks = {cubic, w2, p1};
    report.equivalent = cubic.pass && w2.pass && p1.pass;
    return report;
}

/// Heuristic: first unimodular Q with entries in [-bound, bound] (row-major
/// scan) for which jupp_compare passes. A nullopt result says nothing about
/// larger matrices.
inline std::optional<BasisMap> find_jupp_equivalence(const JuppInvariants& first, const JuppInvariants& second,
                                                     int bound = 3) {
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d) {
                    BasisMap q{{{a, b}, {c, d}}};
                    auto det = determinant(q);
                    if (det != 1 && det != -1) continue;
                    if (jupp_compare(first, second, q).equivalent) return q;
                }
    return std::nullopt;
}

}  // namespace tolman
