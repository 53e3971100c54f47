#pragma once

// Truncated graded slices.
//
// The polynomial space splits into simultaneous eigenspaces of the two Euler
// grading operators; a slice key names one eigenspace (bigraded), a diagonal
// sum of them (total), or the x0-extended version used by the odd-orthogonal
// family. Slices are infinite-dimensional, so every enumeration carries an
// explicit degree cap and lists exactly the slice monomials of total degree
// at most the cap, in canonical order.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscrep/reps.hpp"

namespace oscrep {

struct SliceKey {
    enum class Kind : std::uint8_t { Bigraded, Total, OddTotal };

    Kind kind = Kind::Bigraded;
    long l1 = 0;  // Bigraded: x-side grade
    long l2 = 0;  // Bigraded: y-side grade
    long k = 0;   // Total / OddTotal: combined grade

    static SliceKey bigraded(long l1, long l2) { return {Kind::Bigraded, l1, l2, l1 + l2}; }
    static SliceKey total(long k) { return {Kind::Total, 0, 0, k}; }
    static SliceKey odd_total(long k) { return {Kind::OddTotal, 0, 0, k}; }

    friend bool operator==(const SliceKey&, const SliceKey&) = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::Bigraded:
                return "B<" + std::to_string(l1) + "," + std::to_string(l2) + ">";
            case Kind::Total:
                return "B<" + std::to_string(k) + ">";
            case Kind::OddTotal:
                return "B'<" + std::to_string(k) + ">";
        }
        return "?";
    }
};

struct SliceBasis {
    RepParams params;
    SliceKey key;
    unsigned degree_cap = 0;
    std::vector<Monomial> monomials;  // canonical order, degree <= cap

    std::size_t size() const { return monomials.size(); }
};

namespace detail {

/// Whether a monomial lies in the keyed slice for the given parameters.
inline bool in_slice(const RepParams& p, const SliceKey& key, const Monomial& m) {
    const long l1 = grade_l1(p, m);
    const long l2 = p.has_y() ? grade_l2(p, m) : 0;
    const long x0 = static_cast<long>(m.exponent(VarId::x(0)));
    switch (key.kind) {
        case SliceKey::Kind::Bigraded:
            return x0 == 0 && l1 == key.l1 && l2 == key.l2;
        case SliceKey::Kind::Total:
            return x0 == 0 && l1 + l2 == key.k;
        case SliceKey::Kind::OddTotal:
            return l1 + l2 == key.k - x0;
    }
    return false;
}

inline void enumerate_rec(const std::vector<VarId>& vars, std::size_t i, unsigned budget,
                          Monomial current, std::vector<Monomial>& out) {
    if (i == vars.size()) {
        out.push_back(std::move(current));
        return;
    }
    for (unsigned e = 0; e <= budget; ++e)
        enumerate_rec(vars, i + 1, budget - e,
                      current.times(Monomial::variable(vars[i], e)), out);
}

}  // namespace detail

/// All slice monomials of total degree <= degree_cap, canonically ordered.
/// Every listed monomial is re-verified to be an eigenvector of the grading
/// operators with the keyed eigenvalues.
inline SliceBasis slice_enumerate(const RepParams& p, const SliceKey& key, unsigned degree_cap) {
    if (key.kind == SliceKey::Kind::OddTotal && !p.has_x0())
        throw std::invalid_argument("the x0-extended slice exists only in the odd-orthogonal family");
    if (key.kind == SliceKey::Kind::Bigraded && !p.has_y())
        throw std::invalid_argument("bigraded slices need the two-block variable universe");

    std::vector<Monomial> all;
    detail::enumerate_rec(p.variables(), 0, degree_cap, Monomial{}, all);

    SliceBasis basis{p, key, degree_cap, {}};
    const SpecialOperators ops = special_operators(p);
    for (auto& m : all) {
        if (!detail::in_slice(p, key, m)) continue;
        // Independent check through the grading operators themselves.
        const Polynomial f = Polynomial::term(m, 1);
        const Polynomial fl = ops.flat.apply(f);
        const Polynomial fp = ops.flat_prime.apply(f);
        bool ok = true;
        switch (key.kind) {
            case SliceKey::Kind::Bigraded:
                ok = fl == f * Scalar(key.l1) && fp == f * Scalar(key.l2);
                break;
            case SliceKey::Kind::Total:
                ok = fl + fp == f * Scalar(key.k);
                break;
            case SliceKey::Kind::OddTotal: {
                const WeylOperator euler0 = WeylOperator::term(
                    Monomial::variable(VarId::x(0)), Monomial::variable(VarId::x(0)), 1);
                ok = fl + fp + euler0.apply(f) == f * Scalar(key.k);
                break;
            }
        }
        if (!ok) throw std::logic_error("slice enumeration produced a non-eigen monomial");
        basis.monomials.push_back(std::move(m));
    }
    std::sort(basis.monomials.begin(), basis.monomials.end(), MonomialLess{});
    return basis;
}

}  // namespace oscrep
