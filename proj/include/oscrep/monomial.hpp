#pragma once

// Variables and sparse monomials.
//
// The variable universe is x_0, x_1 .. x_n, y_1 .. y_n; x_0 exists only in
// the odd-orthogonal setting and y_0 never exists. Monomials store their
// nonzero exponents sorted by variable, so equality is plain structural
// equality and all iteration is deterministic.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oscrep {

/// One variable: an axis (X or Y) and an index.
struct VarId {
    enum class Axis : std::uint8_t { X = 0, Y = 1 };

    Axis axis = Axis::X;
    std::uint32_t index = 0;

    static VarId x(std::uint32_t i) { return VarId{Axis::X, i}; }

    static VarId y(std::uint32_t i) {
        if (i == 0) throw std::invalid_argument("y0 is not a variable");
        return VarId{Axis::Y, i};
    }

    /// Variable order: x0 < x1 < ... < xn < y1 < ... < yn.
    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const {
        return (axis == Axis::X ? "x" : "y") + std::to_string(index);
    }
};

/// A monomial: finitely many variables with positive exponents.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors_.emplace_back(v, e);
        return m;
    }

    /// Builds a monomial from an arbitrary factor list: sorts, merges
    /// repeated variables, and drops zero exponents.
    static Monomial collect(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        Monomial m;
        for (const auto& [v, e] : factors) {
            if (e == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == v)
                m.factors_.back().second += e;
            else
                m.factors_.emplace_back(v, e);
        }
        return m;
    }

    bool is_unit() const { return factors_.empty(); }

    std::uint32_t exponent(VarId v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    const std::vector<Factor>& factors() const { return factors_; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
                r.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return r;
    }

    /// Exact division; nullopt when some exponent would go negative.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin();
        for (const auto& [v, e] : o.factors_) {
            while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
            if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
            if (a->second > e) r.factors_.emplace_back(v, a->second - e);
            ++a;
        }
        while (a != factors_.end()) r.factors_.push_back(*a++);
        return r;
    }

    Monomial pow(std::uint32_t k) const {
        Monomial r;
        if (k == 0) return r;
        r.factors_ = factors_;
        for (auto& [v, e] : r.factors_) e *= k;
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;  // sorted by VarId, exponents > 0
};

/// Canonical monomial order: graded, lower total degree first; within a
/// degree the monomial with the larger exponent on the earliest differing
/// variable comes first (so x1^2 precedes x1*x2 precedes x2^2).
inline bool monomial_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia, ++ib;
        } else {
            // The side holding the earlier variable has the larger exponent
            // (the other side has exponent 0 there), so it sorts first.
            return ia->first < ib->first;
        }
    }
    return false;  // equal degree and equal common prefix => identical
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

}  // namespace oscrep
