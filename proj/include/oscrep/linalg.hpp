#pragma once

// Exact linear algebra on truncated slices.
//
// Everything here is plain rational Gaussian elimination: subspaces are kept
// as reduced row-echelon matrices over a slice's canonical monomial list, so
// equal subspaces have byte-identical representations and membership tests
// are exact. The bilinear pairing lives here too, since Gram matrices are
// how the decomposition audits certify orthogonality and nondegeneracy.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscrep/slices.hpp"

namespace oscrep {

/// Thrown when an operator pushes a slice monomial past the degree cap, so
/// a truncated kernel would not be the truncation of the true kernel.
struct DegreeEscape : std::runtime_error {
    explicit DegreeEscape(const std::string& what) : std::runtime_error(what) {}
};

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form; returns the pivot column of each row.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Scalar inv = Scalar(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Scalar f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());  // drop the zero rows
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Echelonized basis of {v : m v = 0} for a matrix with `cols` unknowns.
inline Matrix kernel_basis(Matrix m, std::size_t cols) {
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("kernel_basis: ragged matrix");
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        out.push_back(std::move(v));
    }
    rref(out);  // canonical form
    return out;
}

/// Determinant by fraction-free-enough plain elimination (exact rationals).
inline Scalar determinant(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("determinant: matrix not square");
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Scalar(0);
        if (sel != col) {
            std::swap(m[col], m[sel]);
            det = -det;
        }
        det *= m[col][col];
        const Scalar inv = Scalar(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Scalar f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// A subspace of a truncated slice, stored as canonical reduced row-echelon
/// coordinates over the slice's monomial list.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    static SubspaceBasis from_rows(SliceBasis slice, Matrix rows) {
        for (const auto& r : rows)
            if (r.size() != slice.monomials.size())
                throw std::invalid_argument("subspace row width does not match the slice");
        rref(rows);
        SubspaceBasis b;
        b.slice_ = std::move(slice);
        b.rows_ = std::move(rows);
        return b;
    }

    static SubspaceBasis from_polynomials(SliceBasis slice, const std::vector<Polynomial>& polys) {
        Matrix rows;
        rows.reserve(polys.size());
        for (const auto& f : polys) {
            auto v = coordinates_in(slice, f);
            if (!v)
                throw std::invalid_argument(
                    "polynomial does not lie in the slice's monomial support");
            rows.push_back(std::move(*v));
        }
        return from_rows(std::move(slice), std::move(rows));
    }

    /// Coordinate vector of f over a slice's monomials; nullopt when f has
    /// support outside the truncated slice.
    static std::optional<Row> coordinates_in(const SliceBasis& slice, const Polynomial& f) {
        Row v(slice.monomials.size(), Scalar(0));
        std::size_t i = 0;
        for (const auto& [m, c] : f.terms()) {  // both sides in canonical order
            while (i < slice.monomials.size() && monomial_less(slice.monomials[i], m)) ++i;
            if (i == slice.monomials.size() || !(slice.monomials[i] == m)) return std::nullopt;
            v[i] = c;
        }
        return v;
    }

    const SliceBasis& slice() const { return slice_; }
    const Matrix& rows() const { return rows_; }
    std::size_t dimension() const { return rows_.size(); }

    Polynomial polynomial(std::size_t i) const {
        Polynomial f;
        for (std::size_t c = 0; c < rows_[i].size(); ++c)
            f.add_term(slice_.monomials[c], rows_[i][c]);
        return f;
    }

    std::vector<Polynomial> polynomials() const {
        std::vector<Polynomial> out;
        out.reserve(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(polynomial(i));
        return out;
    }

    /// Exact membership; coordinates over the echelon rows when contained.
    std::optional<Row> coordinates_of(const Polynomial& f) const {
        auto vec = coordinates_in(slice_, f);
        if (!vec) return std::nullopt;
        Row v = std::move(*vec);
        Row coords(rows_.size(), Scalar(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivot_of(r);
            if (v[p] == 0) continue;
            coords[r] = v[p];
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= coords[r] * rows_[r][c];
        }
        for (const auto& c : v)
            if (c != 0) return std::nullopt;
        return coords;
    }

    bool contains(const Polynomial& f) const { return coordinates_of(f).has_value(); }

    /// Row-space equality; requires both bases over the same monomial list.
    bool same_span(const SubspaceBasis& o) const {
        return slice_.monomials == o.slice_.monomials && rows_ == o.rows_;
    }

private:
    std::size_t pivot_of(std::size_t r) const {
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] != 0) return c;
        throw std::logic_error("zero row in echelon basis");
    }

    SliceBasis slice_;
    Matrix rows_;
};

/// Echelon basis of {f in the truncated slice : T(f) = 0}. Refuses (by
/// DegreeEscape) any operator that pushes a slice monomial past the cap,
/// since then the truncated kernel could differ from the kernel's truncation.
inline SubspaceBasis kernel_on_slice(const WeylOperator& T, const SliceBasis& slice) {
    std::vector<Polynomial> images;
    images.reserve(slice.monomials.size());
    std::map<Monomial, std::size_t, MonomialLess> image_index;
    for (const auto& m : slice.monomials) {
        Polynomial img = T.apply(Polynomial::term(m, 1));
        if (img.degree() > slice.degree_cap && !img.is_zero())
            throw DegreeEscape("operator raises degree beyond the slice cap on " +
                               detail::monomial_factors_string(m));
        for (const auto& [mm, c] : img.terms()) image_index.emplace(mm, 0);
        images.push_back(std::move(img));
    }
    std::size_t idx = 0;
    for (auto& [m, i] : image_index) i = idx++;
    Matrix sys(image_index.size(), Row(slice.monomials.size(), Scalar(0)));
    for (std::size_t col = 0; col < images.size(); ++col)
        for (const auto& [mm, c] : images[col].terms()) sys[image_index[mm]][col] = c;
    return SubspaceBasis::from_rows(slice, kernel_basis(std::move(sys), slice.monomials.size()));
}

namespace detail {

inline Scalar monomial_self_pairing(const RepParams& p, const Monomial& m) {
    Integer value(1);
    long sign_exp = 0;
    for (const auto& [v, e] : m.factors()) {
        value *= factorial(e);
        if (v.axis == VarId::Axis::X && v.index >= 1 && v.index <= p.n1) sign_exp += e;
        if (v.axis == VarId::Axis::Y && v.index > p.n2) sign_exp += e;
    }
    return (sign_exp % 2 == 0) ? Scalar(value) : Scalar(-value);
}

}  // namespace detail

/// The symmetric bilinear pairing: distinct monomials are orthogonal and a
/// monomial pairs with itself to (+-) the product of its exponent
/// factorials, the sign counting the twisted-variable exponents. The x0
/// exponent contributes its factorial but never a sign.
inline Scalar bilinear_form(const Polynomial& f, const Polynomial& g, const RepParams& p) {
    Scalar out(0);
    auto a = f.terms().begin();
    auto b = g.terms().begin();
    while (a != f.terms().end() && b != g.terms().end()) {
        if (monomial_less(a->first, b->first))
            ++a;
        else if (monomial_less(b->first, a->first))
            ++b;
        else {
            out += a->second * b->second * detail::monomial_self_pairing(p, a->first);
            ++a, ++b;
        }
    }
    return out;
}

/// Gram matrix of a list of polynomials under the pairing.
inline Matrix gram_matrix(const std::vector<Polynomial>& basis, const RepParams& p) {
    Matrix g(basis.size(), Row(basis.size(), Scalar(0)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            g[i][j] = bilinear_form(basis[i], basis[j], p);
            g[j][i] = g[i][j];
        }
    return g;
}

inline Matrix gram_matrix(const SubspaceBasis& basis, const RepParams& p) {
    return gram_matrix(basis.polynomials(), p);
}

}  // namespace oscrep
