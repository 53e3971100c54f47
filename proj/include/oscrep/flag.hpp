#pragma once

// The triangular-series solver and the closed-form harmonic bases.
//
// The engine completes a seed h with T1(h) = 0 to
//     f = sum_{i>=0} (-T1inv T2)^i (h),
// which lies in ker(T1 + T2): applying T1 telescopes the series against the
// T2 images. T1inv is an explicit right inverse assembled from normalized
// integration steps. Termination is a property of the seed (the relevant T2
// operators strictly lower a nonnegative exponent statistic), and is always
// guarded by an iteration cap; every completed element is re-checked in the
// kernel by direct operator application.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oscrep/linalg.hpp"

namespace oscrep {

/// Thrown when the series increment is still nonzero at the iteration cap:
/// the seed is outside the locally-nilpotent regime of the solver.
struct NonTerminating : std::runtime_error {
    explicit NonTerminating(const std::string& what) : std::runtime_error(what) {}
};

/// One normalized-integration step of a right inverse.
struct IntegrationStep {
    VarId var;
    unsigned multiplicity = 1;
};

struct FlagProblem {
    WeylOperator t1;
    std::vector<IntegrationStep> t1_inverse;  // applied left to right
    WeylOperator t2;
    Polynomial seed;
    unsigned iteration_cap = 64;
};

struct FlagSolution {
    Polynomial value;
    unsigned steps = 0;        // nonzero increments beyond the seed
    bool annihilated = false;  // (t1 + t2)(value) == 0, checked on return
};

namespace detail {

inline Polynomial apply_inverse(const std::vector<IntegrationStep>& steps, const Polynomial& f) {
    Polynomial r = f;
    for (const auto& s : steps) r = integrate(r, s.var, s.multiplicity);
    return r;
}

}  // namespace detail

/// Completes the seed to Σ_{i≥0} (−T₁⁻T₂)^i(seed), iterating until the
/// increment vanishes. The returned flag records whether (T₁+T₂) kills the
/// result — it does whenever the seed is a T₁-kernel element times a factor
/// the iteration is triangular over.
inline FlagSolution series_complete(const FlagProblem& p) {
    if (p.iteration_cap == 0) throw std::invalid_argument("iteration cap must be positive");
    for (const auto& [m, c] : p.seed.terms()) {
        // Right-inverse sanity on the seed's support.
        const Polynomial probe = Polynomial::term(m, 1);
        if (!(p.t1.apply(detail::apply_inverse(p.t1_inverse, probe)) == probe))
            throw std::invalid_argument("t1_inverse is not a right inverse of t1 on the seed support");
    }
    FlagSolution out;
    out.value = p.seed;
    Polynomial incr = p.seed;
    for (unsigned i = 0; i < p.iteration_cap; ++i) {
        incr = -detail::apply_inverse(p.t1_inverse, p.t2.apply(incr));
        if (incr.is_zero()) break;
        out.value += incr;
        ++out.steps;
    }
    if (!incr.is_zero())
        throw NonTerminating("series increment still nonzero after " +
                             std::to_string(p.iteration_cap) + " steps");
    out.annihilated = (p.t1.apply(out.value) + p.t2.apply(out.value)).is_zero();
    return out;
}

/// The classical solution basis element for (∂₁^{m₁} + … + ∂ₙ^{mₙ})u = 0:
/// the completion of the seed x₁^{ℓ₁}⋯xₙ^{ℓₙ} with ℓ₁ < m₁. This series is
/// always finite: each step trades exponents of x₂..xₙ for x₁.
inline Polynomial classical_harmonic_basis(std::uint32_t n, const std::vector<unsigned>& degrees,
                                           const std::vector<unsigned>& shape, unsigned degree_cap) {
    if (n < 1 || degrees.size() != n || shape.size() != n)
        throw std::invalid_argument("need one equation degree and one seed exponent per variable");
    for (unsigned m : degrees)
        if (m == 0) throw std::invalid_argument("equation degrees must be positive");
    if (shape[0] >= degrees[0])
        throw std::invalid_argument("the leading seed exponent must stay below the leading equation degree");
    Monomial seed;
    for (std::uint32_t i = 0; i < n; ++i)
        seed = seed.times(Monomial::variable(VarId::x(i + 1), shape[i]));
    if (seed.degree() > degree_cap) throw std::invalid_argument("seed degree exceeds the cap");
    FlagProblem fp;
    fp.t1 = WeylOperator::partial(VarId::x(1), degrees[0]);
    fp.t1_inverse = {{VarId::x(1), degrees[0]}};
    for (std::uint32_t i = 2; i <= n; ++i) fp.t2 += WeylOperator::partial(VarId::x(i), degrees[i - 1]);
    fp.seed = Polynomial::term(seed, 1);
    FlagSolution s = series_complete(fp);
    if (!s.annihilated) throw std::logic_error("classical series failed its kernel check");
    return s.value;
}

/// A truncated harmonic basis together with its provenance counters. The
/// basis rows are canonical echelon coordinates over the slice; completed
/// series that escape the degree cap and cannot be recombined into it are
/// counted instead of emitted.
struct HarmonicBasisResult {
    SubspaceBasis basis;
    std::size_t seeds_considered = 0;
    std::size_t excluded_over_cap = 0;
    bool kernel_verified = false;  // every emitted element re-checked against the Laplacian
};

namespace detail {

/// The x0-free part of the family's Laplacian/dual pair (the odd family
/// stores the extended operators; the even families store these directly).
inline WeylOperator even_laplace(const RepParams& p) {
    const SpecialOperators ops = special_operators(p);
    if (!p.has_x0()) return ops.laplace;
    return (ops.laplace - WeylOperator::partial(VarId::x(0), 2)) * Scalar(1, 2);
}

inline WeylOperator even_dual(const RepParams& p) {
    const SpecialOperators ops = special_operators(p);
    if (!p.has_x0()) return ops.dual;
    return (ops.dual - WeylOperator::multiplication(Polynomial::variable(VarId::x(0), 2))) *
           Scalar(1, 2);
}

/// Recovers the kernel elements hidden among completions whose correction
/// tails escape the degree cap: a combination of such completions whose
/// beyond-cap monomials cancel lies inside the truncation even though no
/// single summand does. Appends every independent such combination to
/// `elems` (each re-checked against `d` and the cap) and returns the number
/// of completions that remain genuinely out of reach.
inline std::size_t eliminate_tails(std::vector<Polynomial>& elems, std::vector<Polynomial> over_cap,
                                   unsigned cap, const WeylOperator& d) {
    if (over_cap.empty()) return 0;
    std::map<Monomial, std::size_t, MonomialLess> tail_index;
    for (const auto& f : over_cap)
        for (const auto& [mm, c] : f.terms())
            if (mm.degree() > cap) tail_index.emplace(mm, 0);
    std::size_t idx = 0;
    for (auto& [mm, i] : tail_index) i = idx++;
    Matrix tails(tail_index.size(), Row(over_cap.size(), Scalar(0)));
    for (std::size_t col = 0; col < over_cap.size(); ++col)
        for (const auto& [mm, c] : over_cap[col].terms())
            if (mm.degree() > cap) tails[tail_index[mm]][col] = c;
    const Matrix combos = kernel_basis(std::move(tails), over_cap.size());
    for (const auto& lambda : combos) {
        Polynomial f;
        for (std::size_t j = 0; j < over_cap.size(); ++j)
            if (lambda[j] != Scalar(0)) f += over_cap[j] * lambda[j];
        if (f.degree() > cap || !d.apply(f).is_zero())
            throw std::logic_error("tail elimination left the truncated kernel");
        elems.push_back(std::move(f));
    }
    return over_cap.size() - combos.size();
}

/// Series basis for n1 < n2: complete every slice monomial with a vanishing
/// exponent on one of the pivot variables x_{n1+1}, y_{n1+1} through the
/// solver with T1 = ∂_{x_{n1+1}}∂_{y_{n1+1}} and T2 the rest of the
/// Laplacian. Seeds and their corrections live on disjoint monomial sets,
/// so distinct seeds complete to independent elements, and every truncated
/// kernel element expands over completions of in-cap seeds (its seed
/// monomials are among its own terms). Completions whose correction tails
/// escape the cap are not dropped outright: combinations of them whose
/// tails cancel still lie inside the truncation and are recovered by
/// eliminating the beyond-cap monomials.
inline HarmonicBasisResult series_basis(const RepParams& p, const SliceKey& key, unsigned cap) {
    const VarId px = VarId::x(p.n1 + 1), py = VarId::y(p.n1 + 1);
    const SliceBasis slice = slice_enumerate(p, key, cap);
    const WeylOperator d = even_laplace(p);
    const WeylOperator t1 = WeylOperator::partial(px).compose(WeylOperator::partial(py));
    const WeylOperator t2 = d - t1;
    HarmonicBasisResult out;
    std::vector<Polynomial> elems;
    std::vector<Polynomial> over_cap;
    for (const auto& m : slice.monomials) {
        if (m.exponent(px) > 0 && m.exponent(py) > 0) continue;  // not a seed
        ++out.seeds_considered;
        FlagProblem fp{t1, {{px, 1}, {py, 1}}, t2, Polynomial::term(m, 1), 64};
        FlagSolution s = series_complete(fp);
        if (!s.annihilated) throw std::logic_error("series completion failed its kernel check");
        if (!d.apply(s.value).is_zero())
            throw std::logic_error("completed element is not in the Laplacian kernel");
        (s.value.degree() > cap ? over_cap : elems).push_back(std::move(s.value));
    }
    out.excluded_over_cap = eliminate_tails(elems, std::move(over_cap), cap, d);
    out.basis = SubspaceBasis::from_polynomials(slice, elems);
    out.kernel_verified = true;
    return out;
}

/// Ordered lists of `slots` naturals summing to `sum`.
inline void compositions_rec(unsigned remaining, std::size_t slots, std::vector<unsigned>& cur,
                             std::vector<std::vector<unsigned>>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur.push_back(e);
        compositions_rec(remaining - e, slots - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<unsigned>> compositions(unsigned sum, std::size_t slots) {
    std::vector<std::vector<unsigned>> out;
    if (slots == 0) {
        if (sum == 0) out.push_back({});
        return out;
    }
    std::vector<unsigned> cur;
    compositions_rec(sum, slots, cur, out);
    return out;
}

/// A product family: two factor groups with fixed exponent sums and one
/// group with free exponents, enumerated up to a total-degree cap. All
/// factors are homogeneous, so products are homogeneous and the truncated
/// enumeration spans exactly the low-degree part of the full span.
struct ProductSpan {
    std::vector<Polynomial> fixed_a;
    unsigned sum_a = 0;
    std::vector<Polynomial> fixed_b;
    unsigned sum_b = 0;
    std::vector<Polynomial> free_c;
};

inline void budget_rec(const std::vector<Polynomial>& factors, std::size_t i, unsigned budget,
                       const Polynomial& current, std::vector<Polynomial>& out) {
    if (i == factors.size()) {
        out.push_back(current);
        return;
    }
    const unsigned d = factors[i].degree();
    for (unsigned e = 0; e * d <= budget; ++e)
        budget_rec(factors, i + 1, budget - e * d, current * factors[i].pow(e), out);
}

inline std::vector<Polynomial> enumerate_products(const ProductSpan& ps, unsigned cap) {
    std::vector<Polynomial> out;
    for (const auto& ea : compositions(ps.sum_a, ps.fixed_a.size())) {
        Polynomial pa{Scalar(1)};
        for (std::size_t i = 0; i < ea.size(); ++i) pa = pa * ps.fixed_a[i].pow(ea[i]);
        if (pa.degree() > cap) continue;
        for (const auto& eb : compositions(ps.sum_b, ps.fixed_b.size())) {
            Polynomial pb = pa;
            for (std::size_t i = 0; i < eb.size(); ++i) pb = pb * ps.fixed_b[i].pow(eb[i]);
            if (pb.degree() > cap) continue;
            budget_rec(ps.free_c, 0, cap - pb.degree(), pb, out);
        }
    }
    return out;
}

inline Polynomial cross_pair(std::uint32_t p_, std::uint32_t q) {
    // x_p y_q - x_q y_p
    return Polynomial::variable(VarId::x(p_)) * Polynomial::variable(VarId::y(q)) -
           Polynomial::variable(VarId::x(q)) * Polynomial::variable(VarId::y(p_));
}

inline Polynomial mixed_pair(std::uint32_t r, std::uint32_t s) {
    // x_r x_s - y_r y_s
    return Polynomial::variable(VarId::x(r)) * Polynomial::variable(VarId::x(s)) -
           Polynomial::variable(VarId::y(r)) * Polynomial::variable(VarId::y(s));
}

/// Whether a harmonic slice is nonzero in the equal-block setting. Outside
/// these windows the slice's harmonic space is zero (every candidate is
/// reachable from a singular vector that cannot exist there).
inline bool equal_block_admissible(const RepParams& p, long l1, long l2) {
    if (l1 + l2 > 0) return false;
    if (p.n1 == p.n) return l2 >= 0;
    if (l2 > 0) return p.n1 >= 2;
    if (l1 > 0) return p.n1 + 1 < p.n;
    return true;  // both nonpositive
}

/// Explicit product-family basis of the harmonic slice for n1 = n2: spans
/// generated by single variables and the quadratic invariant pairs, with
/// the grading carried by the fixed-sum groups.
inline HarmonicBasisResult equal_block_basis(const RepParams& p, long l1, long l2, unsigned cap) {
    const std::uint32_t n = p.n, n1 = p.n1;
    const SliceBasis slice = slice_enumerate(p, SliceKey::bigraded(l1, l2), cap);
    HarmonicBasisResult out;
    out.kernel_verified = true;
    if (!equal_block_admissible(p, l1, l2)) {
        out.basis = SubspaceBasis::from_rows(slice, {});
        return out;
    }
    ProductSpan ps;
    if (n1 == n) {
        for (std::uint32_t r = 1; r <= n; ++r) ps.fixed_a.push_back(Polynomial::variable(VarId::x(r)));
        ps.sum_a = static_cast<unsigned>(-l1 - l2);
        for (std::uint32_t q = 2; q <= n; ++q)
            for (std::uint32_t pp = 1; pp < q; ++pp) ps.fixed_b.push_back(cross_pair(pp, q));
        ps.sum_b = static_cast<unsigned>(l2);
    } else if (l2 > 0) {
        for (std::uint32_t r = 1; r <= n1; ++r) ps.fixed_a.push_back(Polynomial::variable(VarId::x(r)));
        ps.sum_a = static_cast<unsigned>(-l1 - l2);
        for (std::uint32_t q = 2; q <= n1; ++q)
            for (std::uint32_t pp = 1; pp < q; ++pp) ps.fixed_b.push_back(cross_pair(pp, q));
        ps.sum_b = static_cast<unsigned>(l2);
        for (std::uint32_t r = 1; r <= n1; ++r)
            for (std::uint32_t s = n1 + 1; s <= n; ++s) ps.free_c.push_back(mixed_pair(r, s));
    } else if (l1 > 0) {
        for (std::uint32_t s = n1 + 1; s <= n; ++s) ps.fixed_a.push_back(Polynomial::variable(VarId::y(s)));
        ps.sum_a = static_cast<unsigned>(-l1 - l2);
        for (std::uint32_t q = n1 + 2; q <= n; ++q)
            for (std::uint32_t pp = n1 + 1; pp < q; ++pp) ps.fixed_b.push_back(cross_pair(pp, q));
        ps.sum_b = static_cast<unsigned>(l1);
        for (std::uint32_t r = 1; r <= n1; ++r)
            for (std::uint32_t s = n1 + 1; s <= n; ++s) ps.free_c.push_back(mixed_pair(r, s));
    } else {
        for (std::uint32_t r = 1; r <= n1; ++r) ps.fixed_a.push_back(Polynomial::variable(VarId::x(r)));
        ps.sum_a = static_cast<unsigned>(-l1);
        for (std::uint32_t s = n1 + 1; s <= n; ++s) ps.fixed_b.push_back(Polynomial::variable(VarId::y(s)));
        ps.sum_b = static_cast<unsigned>(-l2);
        for (std::uint32_t r = 1; r <= n1; ++r)
            for (std::uint32_t s = n1 + 1; s <= n; ++s) ps.free_c.push_back(mixed_pair(r, s));
    }
    const WeylOperator d = even_laplace(p);
    std::vector<Polynomial> elems;
    for (auto& f : enumerate_products(ps, cap)) {
        ++out.seeds_considered;
        if (f.is_zero()) continue;
        if (!d.apply(f).is_zero())
            throw std::logic_error("product-family element is not in the Laplacian kernel");
        elems.push_back(std::move(f));
    }
    out.basis = SubspaceBasis::from_polynomials(slice, elems);
    return out;
}

inline void require_two_block_even(const RepParams& p, const char* who) {
    if (!p.has_y() || p.has_x0())
        throw std::invalid_argument(std::string(who) + " needs a two-block instance without x0");
}

}  // namespace detail

/// Truncated basis of the bigraded harmonic slice H<l1,l2>: the pivot-pair
/// series completion when n1 < n2, the explicit product families when
/// n1 = n2 (where no pivot pair exists).
inline HarmonicBasisResult harmonic_basis_sl(const RepParams& p, long l1, long l2,
                                             unsigned degree_cap) {
    detail::require_two_block_even(p, "the bigraded harmonic basis");
    if (p.n1 < p.n2) return detail::series_basis(p, SliceKey::bigraded(l1, l2), degree_cap);
    return detail::equal_block_basis(p, l1, l2, degree_cap);
}

/// Truncated basis of the total-graded harmonic slice H<k> (even families):
/// the same constructions with the grading constraint summed out.
inline HarmonicBasisResult harmonic_basis_total(const RepParams& p, long k, unsigned degree_cap) {
    detail::require_two_block_even(p, "the total-graded harmonic basis");
    if (p.n1 < p.n2) return detail::series_basis(p, SliceKey::total(k), degree_cap);
    const SliceBasis slice = slice_enumerate(p, SliceKey::total(k), degree_cap);
    HarmonicBasisResult out;
    out.kernel_verified = true;
    std::vector<Polynomial> elems;
    const long cap = static_cast<long>(degree_cap);
    for (long l1 = -cap; l1 <= cap; ++l1) {
        const long l2 = k - l1;
        if (l2 < -cap || l2 > cap) continue;
        HarmonicBasisResult piece = detail::equal_block_basis(p, l1, l2, degree_cap);
        out.seeds_considered += piece.seeds_considered;
        out.excluded_over_cap += piece.excluded_over_cap;
        for (auto& f : piece.basis.polynomials()) elems.push_back(std::move(f));
    }
    out.basis = SubspaceBasis::from_polynomials(slice, elems);
    return out;
}

/// Even/odd extension of an x0-free polynomial into the extended Laplacian's
/// kernel: f ↦ Σ_i (−2)^i x₀^{2i+parity} D^i(f)/(2i+parity)!, computed by the
/// series solver with T₁ = ∂₀² and T₂ twice the x0-free Laplacian.
inline Polynomial odd_extend(const RepParams& p, const Polynomial& f, unsigned parity) {
    if (!p.has_x0()) throw std::invalid_argument("the x0 extension needs the odd-orthogonal family");
    if (parity > 1) throw std::invalid_argument("parity must be 0 or 1");
    FlagProblem fp;
    fp.t1 = WeylOperator::partial(VarId::x(0), 2);
    fp.t1_inverse = {{VarId::x(0), 2}};
    fp.t2 = detail::even_laplace(p) * Scalar(2);
    fp.seed = parity == 0 ? f : Polynomial::variable(VarId::x(0)) * f;
    FlagSolution s = series_complete(fp);
    if (!s.annihilated) throw std::logic_error("x0 extension failed its kernel check");
    return s.value;
}

/// Truncated basis of the x0-extended harmonic slice H'<k>: even extensions
/// of the B<k> monomials plus odd extensions of the B<k-1> monomials. The
/// seed term x0^parity * m is the x0-minimal part of its extension and
/// unique to it, so the same tail-elimination step as in the series basis
/// recovers combinations of over-cap extensions whose corrections cancel.
inline HarmonicBasisResult harmonic_basis_odd(const RepParams& p, long k, unsigned degree_cap) {
    if (!p.has_x0())
        throw std::invalid_argument("the extended harmonic basis needs the odd-orthogonal family");
    const SliceBasis slice = slice_enumerate(p, SliceKey::odd_total(k), degree_cap);
    const WeylOperator dp = special_operators(p).laplace;
    HarmonicBasisResult out;
    std::vector<Polynomial> elems;
    std::vector<Polynomial> over_cap;
    std::size_t seeds_beyond_cap = 0;
    for (unsigned parity = 0; parity <= 1; ++parity) {
        const SliceBasis block =
            slice_enumerate(p, SliceKey::total(k - static_cast<long>(parity)), degree_cap);
        for (const auto& m : block.monomials) {
            ++out.seeds_considered;
            if (m.degree() + parity > degree_cap) {
                // The seed term itself escapes the cap; no combination can
                // cancel it, so the extension is out of reach outright.
                ++seeds_beyond_cap;
                continue;
            }
            Polynomial v = odd_extend(p, Polynomial::term(m, 1), parity);
            if (!dp.apply(v).is_zero())
                throw std::logic_error("extended element is not in the extended kernel");
            (v.degree() > degree_cap ? over_cap : elems).push_back(std::move(v));
        }
    }
    out.excluded_over_cap =
        seeds_beyond_cap + detail::eliminate_tails(elems, std::move(over_cap), degree_cap, dp);
    out.basis = SubspaceBasis::from_polynomials(slice, elems);
    out.kernel_verified = true;
    return out;
}

}  // namespace oscrep
