#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tolman/rational.hpp"

namespace tolman {

/// Polynomial in the two formal parameters l1, l2 with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
class ParamPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& constant) { add_term(0, 0, constant); }  // NOLINT: implicit by intent
    ParamPoly(int constant) : ParamPoly(Rational(constant)) {}          // NOLINT

    static ParamPoly l1() { return monomial(1, 0); }
    static ParamPoly l2() { return monomial(0, 1); }
    static ParamPoly monomial(int i, int j, const Rational& c = 1) {
        ParamPoly p;
        p.add_term(i, j, c);
        return p;
    }
    /// a*l1 + b*l2 + c
    static ParamPoly linear(const Rational& a, const Rational& b, const Rational& c = 0) {
        ParamPoly p;
        p.add_term(1, 0, a);
        p.add_term(0, 1, b);
        p.add_term(0, 0, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }

    bool is_homogeneous(int d) const {
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d) return false;
        return true;
    }

    void add_term(int i, int j, const Rational& c) {
        if (i < 0 || j < 0) throw Error(ErrorCode::ParseError, "negative exponent in ParamPoly");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational eval(const Rational& l1v, const Rational& l2v) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int k = 0; k < e.first; ++k) term *= l1v;
            for (int k = 0; k < e.second; ++k) term *= l2v;
            total += term;
        }
        return total;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    ParamPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator-(ParamPoly a) { return a *= Rational(-1); }
    friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
    friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }
    friend ParamPoly operator/(ParamPoly a, const Rational& s) { return a *= Rational(1) / s; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }

    ParamPoly pow(int n) const {
        ParamPoly out(1);
        for (int k = 0; k < n; ++k) out = out * *this;
        return out;
    }

    /// The scalar r with *this == r * other, if one exists.
    std::optional<Rational> ratio_to(const ParamPoly& other) const {
        if (other.is_zero()) return std::nullopt;
        const auto& [e0, c0] = *other.terms_.begin();
        Rational r = coefficient(e0.first, e0.second) / c0;
        if (*this == other * r) return r;
        return std::nullopt;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "2*l1^3 + 3*l1^2*l2 + 3*l1*l2^2". Terms by
    /// descending total degree, then descending power of l1.
    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
            int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
            if (dx != dy) return dx > dy;
            return x.first.first > y.first.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ordered) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string vars;
            auto append = [&vars](const char* name, int power) {
                if (power == 0) return;
                if (!vars.empty()) vars += "*";
                vars += name;
                if (power > 1) vars += "^" + std::to_string(power);
            };
            append("l1", e.first);
            append("l2", e.second);
            if (vars.empty()) {
                out += to_string(mag);
            } else if (mag == 1) {
                out += vars;
            } else {
                std::string m = to_string(mag);
                out += (m.find('/') != std::string::npos ? "(" + m + ")" : m) + "*" + vars;
            }
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace tolman
