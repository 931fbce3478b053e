#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tolman/error.hpp"

namespace tolman {

/// Integer lattice vector (dimension 2 or 3 in practice).
using IntVec = std::vector<std::int64_t>;

inline std::int64_t gcd_of(const IntVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) { return gcd_of(v) == 1; }

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

/// Splits v = g * u with u primitive and g > 0. The sign of v is kept on u.
inline std::pair<IntVec, std::int64_t> primitive(const IntVec& v) {
    std::int64_t g = gcd_of(v);
    if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive() of " + to_string(v));
    IntVec u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / g;
    return {u, g};
}

inline IntVec negated(IntVec v) {
    for (auto& x : v) x = -x;
    return v;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::int64_t det3(const IntVec& a, const IntVec& b, const IntVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace tolman
