#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tolman/gkm.hpp"
#include "tolman/trilinear.hpp"

namespace tolman {

struct FixedPointContribution {
    std::string point;
    std::vector<std::int64_t> weights;
    ParamPoly hamiltonian;
    std::int64_t weight_product = 0;
};

/// Per-fixed-point data of the subcircle, in the graph's point order.
inline std::vector<FixedPointContribution> fixed_point_data(const GKMGraph& g, const CircleAction& s) {
    std::vector<FixedPointContribution> out;
    for (const auto& p : g.points()) {
        FixedPointContribution c{p.id, restrict_weights(g, s, p.id), hamiltonian(g, s, p.id), 1};
        for (auto w : c.weights) {
            if (w == 0)
                throw Error(ErrorCode::DegenerateWeight, "zero weight at " + p.id + " for (" + std::to_string(s.a) +
                                                             "," + std::to_string(s.b) + ")");
            c.weight_product *= w;
        }
        out.push_back(std::move(c));
    }
    return out;
}

enum class ChernMonomial { C1Cubed, C1C2, C3 };

inline std::string_view to_string(ChernMonomial m) {
    switch (m) {
        case ChernMonomial::C1Cubed: return "c1^3";
        case ChernMonomial::C1C2: return "c1c2";
        case ChernMonomial::C3: return "c3";
    }
    return "";
}

inline ChernMonomial parse_chern_monomial(std::string_view s) {
    if (s == "c1^3" || s == "c1c1c1" || s == "c1**3") return ChernMonomial::C1Cubed;
    if (s == "c1c2" || s == "c1*c2" || s == "c2c1") return ChernMonomial::C1C2;
    if (s == "c3") return ChernMonomial::C3;
    throw Error(ErrorCode::ParseError, "unknown Chern monomial '" + std::string(s) + "' (use c1^3, c1c2, c3)");
}

/// Chern number of a six-dimensional GKM space by fixed-point localization:
/// the sum over fixed points of P(sigma_1, sigma_2, sigma_3) / sigma_3 where
/// sigma_k are the elementary symmetric functions of the weights.
inline Rational abbv_chern_number(const GKMGraph& g, const CircleAction& s, ChernMonomial m) {
    if (g.valence() != 3)
        throw Error(ErrorCode::MalformedGraph, "Chern numbers are exposed for six-dimensional graphs only");
    Rational total = 0;
    for (const auto& c : fixed_point_data(g, s)) {
        const auto& w = c.weights;
        Rational s1 = w[0] + w[1] + w[2];
        Rational s2 = Rational(w[0] * w[1] + w[0] * w[2] + w[1] * w[2]);
        Rational s3 = Rational(c.weight_product);
        switch (m) {
            case ChernMonomial::C1Cubed: total += s1 * s1 * s1 / s3; break;
            case ChernMonomial::C1C2: total += s1 * s2 / s3; break;
            case ChernMonomial::C3: total += 1; break;
        }
    }
    return total;
}

/// Symplectic volume integral of omega^n (n = valence) by the
/// Duistermaat-Heckman formula: (-1)^n * sum_p H(p)^n / prod w(p).
inline ParamPoly dh_volume(const GKMGraph& g, const CircleAction& s) {
    const int n = static_cast<int>(g.valence());
    ParamPoly total;
    for (const auto& c : fixed_point_data(g, s)) total += c.hamiltonian.pow(n) / Rational(c.weight_product);
    return n % 2 ? -total : total;
}

/// Trilinear intersection form on the basis (eta', xi') read off the volume
/// polynomial: coefficient of l1^i l2^(3-i) is C(3,i) * xi'^i eta'^(3-i).
inline SymmetricTrilinear cubic_form_from_volume(const ParamPoly& volume) {
    if (!volume.is_homogeneous(3))
        throw Error(ErrorCode::NotHomogeneousCubic, "volume " + volume.pretty() + " is not a cubic form in l1, l2");
    return SymmetricTrilinear::from_values(volume.coefficient(0, 3), volume.coefficient(1, 2) / 3,
                                           volume.coefficient(2, 1) / 3, volume.coefficient(3, 0), {"eta'", "xi'"});
}

inline SymmetricTrilinear cubic_form_from_gkm(const GKMGraph& g, const CircleAction& s) {
    return cubic_form_from_volume(dh_volume(g, s));
}

}  // namespace tolman
