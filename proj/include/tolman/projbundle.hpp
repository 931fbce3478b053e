#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tolman/param_poly.hpp"
#include "tolman/trilinear.hpp"

namespace tolman {

/// Rank-2 complex bundle V over CP^2 with c1(V) = k1 x, c2(V) = k2 x^2.
struct BundleData {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
};

/// Homogeneous class in Z[eta, xi] / (eta^3, xi^2 + k1 eta xi + k2 eta^2),
/// kept in the normal-form basis of its degree:
///   deg 0: 1        deg 2: (eta, xi)
///   deg 4: (eta^2, eta xi)        deg 6: eta^2 xi
class RingElement {
public:
    RingElement() : degree_(0), coords_{0} {}
    RingElement(int degree, std::vector<Integer> coords) : degree_(degree), coords_(std::move(coords)) {
        if (degree < 0 || degree > 6 || degree % 2)
            throw Error(ErrorCode::DegreeOverflow, "invalid degree " + std::to_string(degree));
        if (coords_.size() != basis_size(degree))
            throw Error(ErrorCode::ParseError, "wrong coordinate count for degree " + std::to_string(degree));
    }

    static RingElement one() { return {0, {1}}; }
    static RingElement eta() { return {2, {1, 0}}; }
    static RingElement xi() { return {2, {0, 1}}; }
    /// a*eta + b*xi
    static RingElement linear(const Integer& a, const Integer& b) { return {2, {a, b}}; }
    static RingElement zero(int degree) { return {degree, std::vector<Integer>(basis_size(degree), 0)}; }

    int degree() const noexcept { return degree_; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// Exponents (i, j) of eta^i xi^j for each coordinate.
    static std::vector<std::pair<int, int>> basis(int degree) {
        switch (degree) {
            case 0: return {{0, 0}};
            case 2: return {{1, 0}, {0, 1}};
            case 4: return {{2, 0}, {1, 1}};
            case 6: return {{2, 1}};
        }
        return {};
    }
    static std::size_t basis_size(int degree) { return basis(degree).size(); }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        if (x.degree_ != y.degree_) throw Error(ErrorCode::ParseError, "adding classes of different degree");
        RingElement out = x;
        for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] += y.coords_[i];
        return out;
    }
    friend RingElement operator*(const Integer& s, RingElement x) {
        for (auto& c : x.coords_) c *= s;
        return x;
    }
    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + Integer(-1) * y; }
    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.degree_ == y.degree_ && x.coords_ == y.coords_;
    }

    std::string pretty() const {
        std::string out;
        auto b = basis(degree_);
        for (std::size_t n = 0; n < coords_.size(); ++n) {
            const Integer& c = coords_[n];
            if (c == 0) continue;
            std::string mono;
            auto [i, j] = b[n];
            if (i == 1) mono += "eta";
            if (i == 2) mono += "eta^2";
            if (j == 1) mono += mono.empty() ? "xi" : "*xi";
            Integer mag = c < 0 ? Integer(-c) : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            if (mono.empty()) out += mag.str();
            else out += (mag == 1 ? "" : mag.str() + "*") + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    int degree_;
    std::vector<Integer> coords_;
};

/// Product reduced to normal form using eta^3 = 0 and
/// xi^2 = -k1 eta xi - k2 eta^2.
inline RingElement cup(const RingElement& x, const RingElement& y, const BundleData& v) {
    const int degree = x.degree() + y.degree();
    if (degree > 6)
        throw Error(ErrorCode::DegreeOverflow, "product has degree " + std::to_string(degree) + " > 6");
    std::map<std::pair<int, int>, Integer> acc;
    auto bx = RingElement::basis(x.degree()), by = RingElement::basis(y.degree());
    for (std::size_t m = 0; m < bx.size(); ++m)
        for (std::size_t n = 0; n < by.size(); ++n)
            acc[{bx[m].first + by[n].first, bx[m].second + by[n].second}] += x.coords()[m] * y.coords()[n];
    // Lower the xi-power one step at a time, highest first.
    for (int j = degree / 2; j >= 2; --j) {
        for (int i = 0; i + j <= degree / 2; ++i) {
            auto it = acc.find({i, j});
            if (it == acc.end() || it->second == 0) continue;
            Integer c = it->second;
            acc.erase(it);
            acc[{i + 1, j - 1}] -= v.k1 * c;
            acc[{i + 2, j - 2}] -= v.k2 * c;
        }
    }
    RingElement out = RingElement::zero(degree);
    auto b = RingElement::basis(degree);
    std::vector<Integer> coords(b.size(), 0);
    for (const auto& [e, c] : acc) {
        if (e.first >= 3 || c == 0) continue;  // eta^3 = 0
        for (std::size_t n = 0; n < b.size(); ++n)
            if (b[n] == e) coords[n] += c;
    }
    return {degree, coords};
}

/// Top-degree coordinate; the orientation has integral(eta^2 xi) = 1.
inline Integer integrate(const RingElement& x) {
    if (x.degree() != 6) throw Error(ErrorCode::NotTopDegree, "degree " + std::to_string(x.degree()) + " class");
    return x.coords()[0];
}

/// F(a eta + b xi) = b (3a^2 - 3 k1 a b + (k1^2 - k2) b^2).
inline Integer cubic_form(const Integer& a, const Integer& b, const BundleData& v) {
    const Integer k1 = v.k1, k2 = v.k2;
    return b * (3 * a * a - 3 * k1 * a * b + (k1 * k1 - k2) * b * b);
}

struct TotalChern {
    RingElement c1, c2, c3;
};

/// c(T P(V)) = (1 + 3 eta + 3 eta^2) * (1 + (k1 eta + 2 xi) + (k2 eta^2 + k1 eta xi + xi^2)).
inline TotalChern total_chern(const BundleData& v) {
    const RingElement base1 = RingElement::linear(3, 0);
    const RingElement base2 = RingElement(4, {3, 0});
    const RingElement fib1 = RingElement::linear(v.k1, 2);
    const RingElement xi2 = cup(RingElement::xi(), RingElement::xi(), v);
    const RingElement fib2 = RingElement(4, {v.k2, v.k1}) + xi2;
    TotalChern c{
        base1 + fib1,
        base2 + cup(base1, fib1, v) + fib2,
        cup(base2, fib1, v) + cup(base1, fib2, v),
    };
    return c;
}

/// 2 (27 + k1^2 - 4 k2).
inline Integer c1_cubed(const BundleData& v) {
    const Integer k1 = v.k1, k2 = v.k2;
    return 2 * (27 + k1 * k1 - 4 * k2);
}

struct PontryaginStiefelWhitney {
    RingElement p1;
    std::array<int, 2> w2;  // c1 mod 2 in the (eta, xi) basis
    bool c1_even;
};

inline PontryaginStiefelWhitney p1_and_w2(const BundleData& v) {
    auto c = total_chern(v);
    RingElement p1 = cup(c.c1, c.c1, v) - Integer(2) * c.c2;
    auto mod2 = [](const Integer& n) { return static_cast<int>(((n % 2) + 2) % 2); };
    std::array<int, 2> w2{mod2(c.c1.coords()[0]), mod2(c.c1.coords()[1])};
    return {p1, w2, w2[0] == 0 && w2[1] == 0};
}

/// (<c2, eta>, <c2, xi>).
inline std::pair<Integer, Integer> c2_pairings(const BundleData& v) {
    auto c = total_chern(v);
    return {integrate(cup(c.c2, RingElement::eta(), v)), integrate(cup(c.c2, RingElement::xi(), v))};
}

/// Trilinear form polarizing a binary cubic S(a, b) = sum c_ij a^i b^j (the
/// ParamPoly variables stand for the coordinates a, b):
/// 6F(x,y,z) = S(x+y+z) - S(x+y) - S(x+z) - S(y+z) + S(x) + S(y) + S(z).
inline SymmetricTrilinear trilinear_from_cubic(const ParamPoly& cubic,
                                               std::array<std::string, 2> basis = {"eta", "xi"}) {
    if (!cubic.is_homogeneous(3)) throw Error(ErrorCode::NotCubic, cubic.pretty() + " is not a binary cubic form");
    auto S = [&](const Vec2& y) { return cubic.eval(y[0], y[1]); };
    auto add = [](const Vec2& p, const Vec2& q) { return Vec2{p[0] + q[0], p[1] + q[1]}; };
    auto F = [&](const Vec2& x, const Vec2& y, const Vec2& z) {
        return (S(add(add(x, y), z)) - S(add(x, y)) - S(add(x, z)) - S(add(y, z)) + S(x) + S(y) + S(z)) / 6;
    };
    const Vec2 e0{1, 0}, e1{0, 1};
    return SymmetricTrilinear::from_values(F(e0, e0, e0), F(e0, e0, e1), F(e0, e1, e1), F(e1, e1, e1),
                                           std::move(basis));
}

/// The closed-form cubic of P(V) as a binary cubic in the (eta, xi)
/// coordinates (a, b).
inline ParamPoly bundle_cubic(const BundleData& v) {
    const Rational k1 = v.k1, k2 = v.k2;
    ParamPoly S;
    S.add_term(2, 1, 3);
    S.add_term(1, 2, -3 * k1);
    S.add_term(0, 3, k1 * k1 - k2);
    return S;
}

}  // namespace tolman
