#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// The term map is keyed by the canonical monomial order, never stores a zero
// coefficient, and is therefore a canonical form: two polynomials are equal
// iff their term maps are equal.

#include <map>
#include <stdexcept>
#include <utility>

#include "oscrep/monomial.hpp"
#include "oscrep/rational.hpp"

namespace oscrep {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    Polynomial() = default;

    /// Constant polynomial.
    Polynomial(const Scalar& c) {  // NOLINT: implicit by design
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT

    static Polynomial term(const Monomial& m, const Scalar& c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    static Polynomial variable(VarId v, std::uint32_t e = 1) {
        return term(Monomial::variable(v, e), 1);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; the zero polynomial reports 0.
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Scalar& c) {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend Polynomial operator*(const Scalar& c, const Polynomial& a) { return a * c; }

    friend Polynomial operator/(const Polynomial& a, const Scalar& c) {
        if (c == 0) throw std::invalid_argument("division of a polynomial by zero");
        return a * (Scalar(1) / c);
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(Scalar(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// m-fold partial derivative in v.
    Polynomial derivative(VarId v, unsigned m = 1) const {
        Polynomial r;
        for (const auto& [mon, c] : terms_) {
            std::uint32_t e = mon.exponent(v);
            if (e < m) continue;
            Scalar k = c;
            for (unsigned j = 0; j < m; ++j) k *= Scalar(e - j);
            auto rest = mon.divided_by(Monomial::variable(v, m));
            r.add_term(*rest, k);
        }
        return r;
    }

    /// m-fold right-inverse integration in v: x^a -> x^(a+m)/((a+1)...(a+m)).
    /// The m-fold derivative in v of the result is the original polynomial.
    Polynomial integral(VarId v, unsigned m = 1) const {
        Polynomial r;
        for (const auto& [mon, c] : terms_) {
            std::uint32_t e = mon.exponent(v);
            Scalar k = c;
            for (unsigned j = 1; j <= m; ++j) k /= Scalar(e + j);
            r.add_term(mon.times(Monomial::variable(v, m)), k);
        }
        return r;
    }

private:
    TermMap terms_;
};

/// The right-inverse integration operator as a free function.
inline Polynomial integrate(const Polynomial& f, VarId v, unsigned m = 1) {
    return f.integral(v, m);
}

}  // namespace oscrep
