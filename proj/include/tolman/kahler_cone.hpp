#pragma once

#include <cstdint>
#include <string>

#include "tolman/rational.hpp"

namespace tolman {

/// Restriction of the bundle to a line splits as O(n) + O(-1-n).
struct SplittingData {
    std::int64_t n = 2;
};

/// Pairings on the negative section S of the Hirzebruch surface over the
/// jumping line.
struct CurveInvariants {
    std::int64_t m = 0;  // S.S = -m
    std::int64_t c1_pairing = 0;
    std::int64_t eta_pairing = 0;
    std::int64_t xi_pairing = 0;
};

inline CurveInvariants curve_invariants(const SplittingData& s) {
    if (s.n < 2) throw Error(ErrorCode::NotDestabilizing, "splitting index n = " + std::to_string(s.n) + " < 2");
    CurveInvariants c;
    c.m = 2 * s.n + 1;  // |n - (-1 - n)|
    c.c1_pairing = 3 - c.m;
    c.eta_pairing = 1;
    c.xi_pairing = (c.c1_pairing - 2 * c.eta_pairing) / 2;  // c1 = 2 eta + 2 xi
    return c;
}

inline void require_kahler_parameters(const Rational& l1, const Rational& l2) {
    if (!(0 < l1 && l1 < l2))
        throw Error(ErrorCode::InvalidKahlerParameters,
                    "need 0 < l1 < l2, got l1 = " + to_string(l1) + ", l2 = " + to_string(l2));
}

/// Integral of l1 xi + l2 eta over S.
inline Rational evaluate_class_on_curve(const Rational& l1, const Rational& l2, const SplittingData& s) {
    require_kahler_parameters(l1, l2);
    auto c = curve_invariants(s);
    return l1 * c.xi_pairing + l2 * c.eta_pairing;
}

enum class KahlerVerdict { Obstructed, NotObstructedByThisTest };

inline std::string to_string(KahlerVerdict v) {
    return v == KahlerVerdict::Obstructed ? "Obstructed" : "NotObstructedByThisTest";
}

struct KahlerCertificate {
    KahlerVerdict verdict;
    SplittingData splitting;
    Rational value;  // integral of the class over S; a Kahler class must be positive there
};

/// A compatible Kahler metric would make the class positive on S for the
/// splitting that occurs. n = 2 gives the largest value, so the class is
/// obstructed whenever it is non-positive there. A negative verdict is only
/// the absence of this obstruction.
inline KahlerCertificate kahler_obstruction(const Rational& l1, const Rational& l2, const SplittingData& s = {2}) {
    Rational value = evaluate_class_on_curve(l1, l2, s);
    return {value <= 0 ? KahlerVerdict::Obstructed : KahlerVerdict::NotObstructedByThisTest, s, value};
}

}  // namespace tolman
