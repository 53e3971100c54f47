#pragma once

// The four oscillator representations on polynomial spaces.
//
// A representation instance is selected by (family, n, n1, n2). The abstract
// Lie algebras are realized concretely: sl(n) inside gl(n), o(2n)/sp(2n)
// inside gl(2n), and o(2n+1) inside gl(2n+1) with the extra row/column
// indexed 0. Every represented operator is assembled from per-matrix-unit
// building blocks, so the action extends linearly to any matrix in the
// algebra's span and the homomorphism property is mechanically checkable.
//
// The "twist" relative to the canonical oscillator action: on the x-side the
// first n1 variables have (x_i, d/dx_i) replaced by (d/dx_i, -x_i), and on
// the y-side the last n - n2 variables are twisted the same way. The x0
// variable exists only in the odd-orthogonal family.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oscrep/weyl.hpp"

namespace oscrep {

enum class Family : std::uint8_t { SpecialLinear, OrthoEven, OrthoOdd, Symplectic };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::SpecialLinear: return "sl";
        case Family::OrthoEven: return "so-even";
        case Family::OrthoOdd: return "so-odd";
        case Family::Symplectic: return "sp";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    if (s == "sl") return Family::SpecialLinear;
    if (s == "so-even") return Family::OrthoEven;
    if (s == "so-odd") return Family::OrthoOdd;
    if (s == "sp") return Family::Symplectic;
    return std::nullopt;
}

/// Parameters selecting one representation instance. `single_block` selects
/// the gl(n)-on-F[x_1..x_n] variant of the special-linear family (one
/// twisted variable block, no y variables); it is the classical
/// harmonic-polynomial setting consumed by `classical_harmonic_basis` and is
/// rejected by the two-block machinery.
struct RepParams {
    Family family = Family::SpecialLinear;
    std::uint32_t n = 2;
    std::uint32_t n1 = 1;
    std::uint32_t n2 = 1;
    bool single_block = false;

    static RepParams make(Family family, std::uint32_t n, std::uint32_t n1, std::uint32_t n2) {
        if (n < 2) throw std::invalid_argument("representation parameters require n >= 2");
        if (n1 < 1 || n1 > n2 || n2 > n)
            throw std::invalid_argument("representation parameters require 1 <= n1 <= n2 <= n");
        return RepParams{family, n, n1, n2, false};
    }

    /// The one-block gl(n) mode: variables x_1..x_n only, twist on x_1..x_n1.
    static RepParams make_single_block(std::uint32_t n, std::uint32_t n1) {
        if (n < 2) throw std::invalid_argument("representation parameters require n >= 2");
        if (n1 < 1 || n1 >= n)
            throw std::invalid_argument("single-block parameters require 1 <= n1 < n");
        return RepParams{Family::SpecialLinear, n, n1, n1, true};
    }

    bool has_x0() const { return family == Family::OrthoOdd; }
    bool has_y() const { return !single_block; }

    /// The full variable universe in canonical order.
    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        if (has_x0()) vs.push_back(VarId::x(0));
        for (std::uint32_t i = 1; i <= n; ++i) vs.push_back(VarId::x(i));
        if (has_y())
            for (std::uint32_t i = 1; i <= n; ++i) vs.push_back(VarId::y(i));
        return vs;
    }

    friend bool operator==(const RepParams&, const RepParams&) = default;
};

/// A sparse matrix in gl(2n+1), rows/columns indexed 0..2n. Index 0 is used
/// only by the odd-orthogonal family; the special-linear family lives in the
/// 1..n block.
class AbstractElement {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using EntryMap = std::map<Key, Scalar>;

    AbstractElement() = default;

    static AbstractElement unit(std::uint32_t r, std::uint32_t s) {
        AbstractElement a;
        a.entries_.emplace(Key{r, s}, 1);
        return a;
    }

    bool is_zero() const { return entries_.empty(); }
    const EntryMap& entries() const { return entries_; }

    void add(std::uint32_t r, std::uint32_t s, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = entries_.emplace(Key{r, s}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) entries_.erase(it);
        }
    }

    AbstractElement& operator+=(const AbstractElement& o) {
        for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
        return *this;
    }
    AbstractElement& operator-=(const AbstractElement& o) {
        for (const auto& [k, c] : o.entries_) add(k.first, k.second, -c);
        return *this;
    }
    friend AbstractElement operator+(AbstractElement a, const AbstractElement& b) { return a += b; }
    friend AbstractElement operator-(AbstractElement a, const AbstractElement& b) { return a -= b; }

    AbstractElement operator-() const {
        AbstractElement r(*this);
        for (auto& [k, c] : r.entries_) c = -c;
        return r;
    }

    friend AbstractElement operator*(const AbstractElement& a, const Scalar& c) {
        AbstractElement r;
        if (c == 0) return r;
        for (const auto& [k, v] : a.entries_) r.entries_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const AbstractElement&, const AbstractElement&) = default;

private:
    EntryMap entries_;
};

/// Matrix product ab.
inline AbstractElement abstract_multiply(const AbstractElement& a, const AbstractElement& b) {
    AbstractElement r;
    for (const auto& [ka, ca] : a.entries())
        for (const auto& [kb, cb] : b.entries())
            if (ka.second == kb.first) r.add(ka.first, kb.second, ca * cb);
    return r;
}

/// Matrix commutator ab - ba, the source of all structure constants.
inline AbstractElement abstract_bracket(const AbstractElement& a, const AbstractElement& b) {
    return abstract_multiply(a, b) - abstract_multiply(b, a);
}

/// Matrix transpose.
inline AbstractElement transpose_element(const AbstractElement& a) {
    AbstractElement r;
    for (const auto& [k, c] : a.entries()) r.add(k.second, k.first, c);
    return r;
}

namespace detail {

inline WeylOperator mult_var(VarId v) { return WeylOperator::multiplication(Polynomial::variable(v)); }
inline WeylOperator mult2(VarId v, VarId w) {
    return WeylOperator::multiplication(Polynomial::variable(v) * Polynomial::variable(w));
}
inline WeylOperator d2(VarId v, VarId w) {
    return WeylOperator::partial(v).compose(WeylOperator::partial(w));
}
/// x_v * d/dw as a single normal-ordered term.
inline WeylOperator mult_d(VarId v, VarId w) {
    return WeylOperator::term(Monomial::variable(v), Monomial::variable(w), 1);
}

/// x-side unit action: the twisted gl(n) table on x_1..x_n with the swap
/// applied to the first n1 variables.
inline WeylOperator ex_unit(const RepParams& p, std::uint32_t i, std::uint32_t j) {
    const auto xi = VarId::x(i), xj = VarId::x(j);
    const bool ti = i <= p.n1, tj = j <= p.n1;  // twisted slots
    if (ti && tj) {
        WeylOperator r = -mult_d(xj, xi);
        if (i == j) r -= WeylOperator::identity();
        return r;
    }
    if (ti && !tj) return d2(xi, xj);
    if (!ti && tj) return -mult2(xi, xj);
    return mult_d(xi, xj);
}

/// y-side unit action: the twisted table on y_1..y_n with the swap applied
/// to the last n - n2 variables.
inline WeylOperator ey_unit(const RepParams& p, std::uint32_t i, std::uint32_t j) {
    const auto yi = VarId::y(i), yj = VarId::y(j);
    const bool ti = i > p.n2, tj = j > p.n2;  // twisted slots
    if (!ti && !tj) return mult_d(yi, yj);
    if (!ti && tj) return -mult2(yi, yj);
    if (ti && !tj) return d2(yi, yj);
    WeylOperator r = -mult_d(yj, yi);
    if (i == j) r -= WeylOperator::identity();
    return r;
}

}  // namespace detail

/// The represented operator of a single matrix unit E_{r,s}, extended
/// linearly to all of gl(2n+1) (gl(n) for the special-linear family). For
/// the orthogonal/symplectic families the individual units are internal
/// building blocks; only their antisymmetric/symmetric combinations lie in
/// the algebra.
inline WeylOperator unit_action(const RepParams& p, std::uint32_t r, std::uint32_t s) {
    const std::uint32_t n = p.n;
    if (p.family == Family::SpecialLinear) {
        if (r < 1 || r > n || s < 1 || s > n)
            throw std::invalid_argument("matrix-unit index out of range for the linear family");
        if (p.single_block) return detail::ex_unit(p, r, s);
        return detail::ex_unit(p, r, s) - detail::ey_unit(p, s, r);
    }
    const std::uint32_t hi = 2 * n;
    if (r > hi || s > hi) throw std::invalid_argument("matrix-unit index out of range");
    if ((r == 0 || s == 0) && !p.has_x0())
        throw std::invalid_argument("index 0 exists only in the odd-orthogonal family");

    if (r == 0 && s == 0) return WeylOperator::zero();
    if (r == 0) {
        // Row 0: multiplication by x0 against the column variable.
        if (s <= n) {
            return s <= p.n1 ? -detail::mult2(VarId::x(0), VarId::x(s))
                             : detail::mult_d(VarId::x(0), VarId::x(s));
        }
        const std::uint32_t i = s - n;
        return i <= p.n2 ? detail::mult_d(VarId::x(0), VarId::y(i))
                         : -detail::mult2(VarId::x(0), VarId::y(i));
    }
    if (s == 0) {
        // Column 0: d/dx0 against the row variable.
        if (r <= n) {
            return r <= p.n1 ? detail::d2(VarId::x(0), VarId::x(r))
                             : detail::mult_d(VarId::x(r), VarId::x(0));
        }
        const std::uint32_t i = r - n;
        return i <= p.n2 ? detail::mult_d(VarId::y(i), VarId::x(0))
                         : detail::d2(VarId::x(0), VarId::y(i));
    }
    if (r <= n && s <= n) return detail::ex_unit(p, r, s);
    if (r > n && s > n) return detail::ey_unit(p, r - n, s - n);
    if (r <= n) {
        // E_{i, n+j}: crosses from the y side to the x side.
        const std::uint32_t i = r, j = s - n;
        const bool ti = i <= p.n1, tj = j <= p.n2;
        if (ti && tj) return detail::d2(VarId::x(i), VarId::y(j));
        if (ti && !tj) return -detail::mult_d(VarId::y(j), VarId::x(i));
        if (!ti && tj) return detail::mult_d(VarId::x(i), VarId::y(j));
        return -detail::mult2(VarId::x(i), VarId::y(j));
    }
    // E_{n+i, j}: crosses from the x side to the y side.
    const std::uint32_t i = r - n, j = s;
    const bool tj = j <= p.n1, ti = i <= p.n2;
    if (tj && ti) return -detail::mult2(VarId::x(j), VarId::y(i));
    if (tj && !ti) return -detail::mult_d(VarId::x(j), VarId::y(i));
    if (!tj && ti) return detail::mult_d(VarId::y(i), VarId::x(j));
    return detail::d2(VarId::x(j), VarId::y(i));
}

/// Represented operator of an arbitrary element in the family's span.
inline WeylOperator rho(const RepParams& p, const AbstractElement& a) {
    WeylOperator out;
    for (const auto& [k, c] : a.entries()) out += unit_action(p, k.first, k.second) * c;
    return out;
}

/// One named generator: the abstract matrix together with its represented
/// operator.
struct Generator {
    std::string name;
    AbstractElement element;
    WeylOperator op;
};

namespace detail {

inline std::string unit_name(std::uint32_t r, std::uint32_t s) {
    return "E[" + std::to_string(r) + "," + std::to_string(s) + "]";
}

inline Generator make_generator(const RepParams& p, std::string name, const AbstractElement& a) {
    return Generator{std::move(name), a, rho(p, a)};
}

inline Generator combo2(const RepParams& p, std::uint32_t r1, std::uint32_t s1, char sign,
                        std::uint32_t r2, std::uint32_t s2) {
    AbstractElement a = AbstractElement::unit(r1, s1);
    if (sign == '-')
        a -= AbstractElement::unit(r2, s2);
    else
        a += AbstractElement::unit(r2, s2);
    return make_generator(p, unit_name(r1, s1) + sign + unit_name(r2, s2), a);
}

}  // namespace detail

/// A spanning set of the abstract algebra, each element paired with its
/// represented operator.
inline std::vector<Generator> spanning_set(const RepParams& p) {
    using detail::combo2;
    using detail::make_generator;
    using detail::unit_name;
    const std::uint32_t n = p.n;
    std::vector<Generator> out;
    if (p.family == Family::SpecialLinear) {
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j)
                if (i != j) out.push_back(make_generator(p, unit_name(i, j), AbstractElement::unit(i, j)));
        for (std::uint32_t i = 1; i < n; ++i) {
            AbstractElement h = AbstractElement::unit(i, i) - AbstractElement::unit(i + 1, i + 1);
            out.push_back(make_generator(p, "h[" + std::to_string(i) + "]", h));
        }
        return out;
    }
    // The gl(n)-block combinations are shared by the even/odd orthogonal and
    // symplectic families.
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j) out.push_back(combo2(p, i, j, '-', n + j, n + i));
    if (p.family == Family::Symplectic) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            out.push_back(make_generator(p, unit_name(i, n + i), AbstractElement::unit(i, n + i)));
            out.push_back(make_generator(p, unit_name(n + i, i), AbstractElement::unit(n + i, i)));
        }
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = i + 1; j <= n; ++j) {
                out.push_back(combo2(p, i, n + j, '+', j, n + i));
                out.push_back(combo2(p, n + i, j, '+', n + j, i));
            }
        return out;
    }
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            out.push_back(combo2(p, i, n + j, '-', j, n + i));
            out.push_back(combo2(p, n + j, i, '-', n + i, j));
        }
    if (p.family == Family::OrthoOdd)
        for (std::uint32_t i = 1; i <= n; ++i) {
            out.push_back(combo2(p, 0, i, '-', n + i, 0));
            out.push_back(combo2(p, 0, n + i, '-', i, 0));
        }
    return out;
}

/// The grading operators and the family's Laplacian/dual pair.
struct SpecialOperators {
    WeylOperator flat;        // x-side Euler grading
    WeylOperator flat_prime;  // y-side Euler grading (zero in single-block mode)
    WeylOperator laplace;     // D (or its odd-family variant)
    WeylOperator dual;        // eta (or its odd-family variant)
};

inline SpecialOperators special_operators(const RepParams& p) {
    using WO = WeylOperator;
    SpecialOperators s;
    for (std::uint32_t r = 1; r <= p.n; ++r) {
        WO e = detail::mult_d(VarId::x(r), VarId::x(r));
        if (r <= p.n1)
            s.flat -= e;
        else
            s.flat += e;
    }
    if (!p.has_y()) return s;  // single-block mode: only the x-side grading
    for (std::uint32_t r = 1; r <= p.n; ++r) {
        WO e = detail::mult_d(VarId::y(r), VarId::y(r));
        if (r <= p.n2)
            s.flat_prime += e;
        else
            s.flat_prime -= e;
    }
    WO d, eta;
    for (std::uint32_t i = 1; i <= p.n1; ++i) {
        d -= detail::mult_d(VarId::x(i), VarId::y(i));
        eta += detail::mult_d(VarId::y(i), VarId::x(i));
    }
    for (std::uint32_t r = p.n1 + 1; r <= p.n2; ++r) {
        d += detail::d2(VarId::x(r), VarId::y(r));
        eta += detail::mult2(VarId::x(r), VarId::y(r));
    }
    for (std::uint32_t sdx = p.n2 + 1; sdx <= p.n; ++sdx) {
        d -= detail::mult_d(VarId::y(sdx), VarId::x(sdx));
        eta += detail::mult_d(VarId::x(sdx), VarId::y(sdx));
    }
    if (p.has_x0()) {
        s.laplace = WO::partial(VarId::x(0), 2) + Scalar(2) * d;
        s.dual = WO::multiplication(Polynomial::variable(VarId::x(0), 2)) + Scalar(2) * eta;
    } else {
        s.laplace = d;
        s.dual = eta;
    }
    return s;
}

/// Cartan basis: traceless diagonal differences for the linear family,
/// diagonal block differences for the others.
inline std::vector<Generator> cartan_basis(const RepParams& p) {
    std::vector<Generator> out;
    if (p.family == Family::SpecialLinear) {
        for (std::uint32_t i = 1; i < p.n; ++i) {
            AbstractElement h = AbstractElement::unit(i, i) - AbstractElement::unit(i + 1, i + 1);
            out.push_back(detail::make_generator(p, "h[" + std::to_string(i) + "]", h));
        }
    } else {
        for (std::uint32_t i = 1; i <= p.n; ++i)
            out.push_back(detail::combo2(p, i, i, '-', p.n + i, p.n + i));
    }
    return out;
}

/// The simple positive generators used by the singular-vector search: the
/// linear-family simple raising elements, realized inside each family (for
/// the orthogonal/symplectic families the corresponding block combination).
inline std::vector<Generator> simple_positive(const RepParams& p) {
    std::vector<Generator> out;
    const std::uint32_t n = p.n;
    for (std::uint32_t i = 1; i < n; ++i) {
        if (p.family == Family::SpecialLinear) {
            out.push_back(detail::make_generator(p, detail::unit_name(i, i + 1),
                                                 AbstractElement::unit(i, i + 1)));
        } else {
            out.push_back(detail::combo2(p, i, i + 1, '-', n + i + 1, n + i));
        }
    }
    // The non-linear families carry one more simple root.
    switch (p.family) {
        case Family::SpecialLinear:
            break;
        case Family::OrthoEven:
            if (n >= 2) out.push_back(detail::combo2(p, n - 1, n + n, '-', n, n + n - 1));
            break;
        case Family::OrthoOdd:
            out.push_back(detail::combo2(p, 0, n + n, '-', n, 0));
            break;
        case Family::Symplectic:
            out.push_back(detail::make_generator(p, detail::unit_name(n, n + n),
                                                 AbstractElement::unit(n, n + n)));
            break;
    }
    return out;
}

/// Simultaneous Cartan eigenvalues of a polynomial, if it is an eigenvector
/// of every Cartan generator; otherwise nullopt (not a weight vector).
inline std::optional<std::vector<Scalar>> weight_of(const Polynomial& f, const RepParams& p) {
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no weight");
    std::vector<Scalar> w;
    for (const auto& g : cartan_basis(p)) {
        Polynomial image = g.op.apply(f);
        // Candidate eigenvalue from the lead term of f, then exact check.
        const auto& [m0, c0] = *f.terms().begin();
        Scalar lambda = image.coefficient(m0) / c0;
        if (!(image == f * lambda)) return std::nullopt;
        w.push_back(lambda);
    }
    return w;
}

/// The x-side grading of a monomial (eigenvalue under the x Euler operator).
inline long grade_l1(const RepParams& p, const Monomial& m) {
    long l1 = 0;
    for (const auto& [v, e] : m.factors()) {
        if (v.axis != VarId::Axis::X || v.index == 0) continue;
        l1 += (v.index <= p.n1) ? -static_cast<long>(e) : static_cast<long>(e);
    }
    return l1;
}

/// The y-side grading of a monomial (eigenvalue under the y Euler operator).
inline long grade_l2(const RepParams& p, const Monomial& m) {
    long l2 = 0;
    for (const auto& [v, e] : m.factors()) {
        if (v.axis != VarId::Axis::Y) continue;
        l2 += (v.index <= p.n2) ? static_cast<long>(e) : -static_cast<long>(e);
    }
    return l2;
}

}  // namespace oscrep
