#pragma once

// The normal-ordered Weyl algebra: finite sums of
//     coeff * (multiplication monomial) * (derivative monomial)
// with all multiplications written to the left of all derivatives. The
// canonical term map makes operator equality decidable by comparison, and
// composition rewrites derivative-past-multiplication factors with the
// commutation rule [d/dx, x] = 1:
//
//     d^a x^b  =  sum_k  C(a,k) C(b,k) k!  x^(b-k) d^(a-k)   (per variable).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oscrep/polynomial.hpp"
#include "oscrep/text.hpp"

namespace oscrep {

struct WeylTermKey {
    Monomial mult;
    Monomial deriv;

    friend bool operator==(const WeylTermKey&, const WeylTermKey&) = default;
};

/// Canonical term order: by the product monomial mult*deriv, then by the
/// multiplication part, then by the derivative part. Sorting by the product
/// groups the terms the way the displayed operators read (x1*dy1 before
/// dx2*dy2 before y3*dx3).
struct WeylTermLess {
    bool operator()(const WeylTermKey& a, const WeylTermKey& b) const {
        Monomial pa = a.mult.times(a.deriv), pb = b.mult.times(b.deriv);
        if (pa != pb) return monomial_less(pa, pb);
        if (a.mult != b.mult) return monomial_less(a.mult, b.mult);
        return monomial_less(a.deriv, b.deriv);
    }
};

class WeylOperator {
public:
    using TermMap = std::map<WeylTermKey, Scalar, WeylTermLess>;

    WeylOperator() = default;

    static WeylOperator zero() { return {}; }

    static WeylOperator identity() { return term({}, {}, 1); }

    static WeylOperator term(const Monomial& mult, const Monomial& deriv, const Scalar& c) {
        WeylOperator t;
        if (c != 0) t.terms_.emplace(WeylTermKey{mult, deriv}, c);
        return t;
    }

    /// Multiplication by a fixed polynomial.
    static WeylOperator multiplication(const Polynomial& p) {
        WeylOperator t;
        for (const auto& [m, c] : p.terms()) t.terms_.emplace(WeylTermKey{m, {}}, c);
        return t;
    }

    /// The m-th partial derivative in v.
    static WeylOperator partial(VarId v, std::uint32_t m = 1) {
        return term({}, Monomial::variable(v, m), 1);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& mult, const Monomial& deriv, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(WeylTermKey{mult, deriv}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeylOperator& operator+=(const WeylOperator& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.mult, k.deriv, c);
        return *this;
    }
    WeylOperator& operator-=(const WeylOperator& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.mult, k.deriv, -c);
        return *this;
    }
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }

    WeylOperator operator-() const {
        WeylOperator r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend WeylOperator operator*(const WeylOperator& a, const Scalar& c) {
        WeylOperator r;
        if (c == 0) return r;
        for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, v * c);
        return r;
    }
    friend WeylOperator operator*(const Scalar& c, const WeylOperator& a) { return a * c; }

    friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

    /// Exact image of a polynomial.
    Polynomial apply(const Polynomial& f) const {
        Polynomial out;
        for (const auto& [key, c] : terms_) {
            for (const auto& [mon, a] : f.terms()) {
                Scalar k = c * a;
                bool dead = false;
                for (const auto& [v, e] : key.deriv.factors()) {
                    std::uint32_t g = mon.exponent(v);
                    if (g < e) {
                        dead = true;
                        break;
                    }
                    for (std::uint32_t j = 0; j < e; ++j) k *= Scalar(g - j);
                }
                if (dead) continue;
                out.add_term(mon.divided_by(key.deriv)->times(key.mult), k);
            }
        }
        return out;
    }

    /// Normal-ordered composition: apply(compose(S,T), f) = S(T(f)).
    WeylOperator compose(const WeylOperator& o) const {
        WeylOperator out;
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                // Normal-order deriv(a) against mult(b): choose, per variable,
                // how many derivatives contract into the multiplication part.
                std::vector<std::pair<VarId, std::uint32_t>> overlap;
                for (const auto& [v, e] : ka.deriv.factors()) {
                    std::uint32_t g = kb.mult.exponent(v);
                    if (g > 0) overlap.emplace_back(v, std::min(e, g));
                }
                contract(out, ka, kb, ca * cb, overlap, 0, Monomial{}, Scalar(1));
            }
        }
        return out;
    }

    friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
        return a.compose(b);
    }

    WeylOperator pow(unsigned e) const {
        WeylOperator r = identity();
        for (unsigned i = 0; i < e; ++i) r = r.compose(*this);
        return r;
    }

    /// Largest per-term degree gain (deg mult - deg deriv); a value <= 0
    /// certifies the operator never raises total degree.
    long max_degree_gain() const {
        long g = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            long d = static_cast<long>(k.mult.degree()) - static_cast<long>(k.deriv.degree());
            if (first || d > g) g = d;
            first = false;
        }
        return terms_.empty() ? 0 : g;
    }

private:
    static void contract(WeylOperator& out, const WeylTermKey& a, const WeylTermKey& b,
                         const Scalar& coeff, const std::vector<std::pair<VarId, std::uint32_t>>& overlap,
                         std::size_t i, const Monomial& contracted, const Scalar& factor) {
        if (i == overlap.size()) {
            Monomial mult = a.mult.times(*b.mult.divided_by(contracted));
            Monomial deriv = a.deriv.divided_by(contracted)->times(b.deriv);
            out.add_term(mult, deriv, coeff * factor);
            return;
        }
        const auto& [v, kmax] = overlap[i];
        std::uint32_t e = a.deriv.exponent(v), g = b.mult.exponent(v);
        for (std::uint32_t k = 0; k <= kmax; ++k) {
            // C(e,k) * C(g,k) * k!  ways to contract k derivatives into x^g.
            Scalar f(binomial(Integer(e), k) * binomial(Integer(g), k) * factorial(k));
            contract(out, a, b, coeff, overlap, i + 1,
                     contracted.times(Monomial::variable(v, k)), factor * f);
        }
    }

    TermMap terms_;
};

/// Commutator S*T - T*S in normal form.
inline WeylOperator bracket(const WeylOperator& s, const WeylOperator& t) {
    return s.compose(t) - t.compose(s);
}

/// Operator rendering. Text style prints derivative factors with a "∂"
/// prefix ("∂x1"); JSON style uses the ASCII "d" prefix ("dx1").
enum class OpStyle { Text, Json };

inline std::string to_string(const WeylOperator& op, OpStyle style = OpStyle::Text) {
    if (op.is_zero()) return "0";
    const char* d = (style == OpStyle::Text) ? "∂" : "d";
    std::string out;
    for (const auto& [key, c] : op.terms()) {
        Scalar mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string factors = detail::monomial_factors_string(key.mult);
        for (const auto& [v, e] : key.deriv.factors()) {
            if (!factors.empty()) factors += "*";
            factors += d + v.name();
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty())
            out += scalar_to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += scalar_to_string(mag) + "*" + factors;
    }
    return out;
}

}  // namespace oscrep
