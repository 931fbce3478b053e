#pragma once

#include <array>
#include <string>

#include "tolman/rational.hpp"

namespace tolman {

using Vec2 = std::array<Rational, 2>;

/// Symmetric trilinear form on a rank-2 lattice, stored as the full 2x2x2
/// array of values on basis triples.
class SymmetricTrilinear {
public:
    SymmetricTrilinear() = default;
    explicit SymmetricTrilinear(std::array<std::string, 2> basis) : basis_(std::move(basis)) {}

    /// Build from the four independent values F(e0,e0,e0), F(e0,e0,e1),
    /// F(e0,e1,e1), F(e1,e1,e1).
    static SymmetricTrilinear from_values(const Rational& f000, const Rational& f001, const Rational& f011,
                                          const Rational& f111, std::array<std::string, 2> basis = {"e0", "e1"}) {
        SymmetricTrilinear t(std::move(basis));
        const std::array<Rational, 4> by_ones{f000, f001, f011, f111};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) t.entries_[slot(i, j, k)] = by_ones[i + j + k];
        return t;
    }

    const Rational& at(int i, int j, int k) const { return entries_[slot(i, j, k)]; }
    const std::array<std::string, 2>& basis() const noexcept { return basis_; }

    Rational operator()(const Vec2& x, const Vec2& y, const Vec2& z) const {
        Rational total = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) total += at(i, j, k) * x[i] * y[j] * z[k];
        return total;
    }

    Rational cubic(const Vec2& y) const { return (*this)(y, y, y); }

    bool is_symmetric() const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    if (at(i, j, k) != at(j, i, k) || at(i, j, k) != at(i, k, j)) return false;
        return true;
    }

    /// Entrywise comparison; basis labels are ignored.
    friend bool operator==(const SymmetricTrilinear& a, const SymmetricTrilinear& b) {
        return a.entries_ == b.entries_;
    }

private:
    static int slot(int i, int j, int k) { return 4 * i + 2 * j + k; }

    std::array<std::string, 2> basis_{"e0", "e1"};
    std::array<Rational, 8> entries_{};
};

}  // namespace tolman
