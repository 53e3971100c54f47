// Exact arithmetic, monomials, polynomials, and the text round trip.

#include <catch2/catch_amalgamated.hpp>

#include "oscrep/polynomial.hpp"
#include "oscrep/text.hpp"

using namespace oscrep;

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(Integer(4), 2) == 6);
    CHECK(binomial(Integer(0), 0) == 1);
    CHECK(binomial(Integer(3), 5) == 0);
    // Generalized: C(-1, 3) = (-1)^3 C(3, 3) = -1.
    CHECK(binomial(Integer(-1), 3) == -1);
    CHECK(binomial(Integer(-2), 2) == 3);
}

TEST_CASE("scalar helpers") {
    CHECK(scalar_from_string("3/4") == Scalar(3, 4));
    CHECK(scalar_from_string("-2") == Scalar(-2));
    CHECK(scalar_to_string(Scalar(-5, 3)) == "-5/3");
    CHECK(scalar_pow(Scalar(2, 3), 3) == Scalar(8, 27));
    CHECK(scalar_pow(Scalar(-1), 7) == Scalar(-1));
}

TEST_CASE("variable identities and names") {
    CHECK(VarId::x(1).name() == "x1");
    CHECK(VarId::y(2).name() == "y2");
    CHECK(VarId::x(0).name() == "x0");
    CHECK(VarId::x(1) == VarId::x(1));
    CHECK(VarId::x(1) != VarId::y(1));
    CHECK(VarId::x(3) < VarId::y(1));  // all x precede all y
    CHECK(VarId::x(0) < VarId::x(1));
}

TEST_CASE("monomial algebra") {
    const Monomial one;
    const Monomial x1 = Monomial::variable(VarId::x(1));
    const Monomial x1y2 = x1.times(Monomial::variable(VarId::y(2)));
    CHECK(one.is_unit());
    CHECK(one.degree() == 0);
    CHECK(x1y2.degree() == 2);
    CHECK(x1y2.exponent(VarId::x(1)) == 1);
    CHECK(x1y2.exponent(VarId::x(2)) == 0);
    CHECK(x1.pow(3).exponent(VarId::x(1)) == 3);
    CHECK(x1.pow(0) == one);

    const auto q = x1y2.divided_by(x1);
    REQUIRE(q.has_value());
    CHECK(*q == Monomial::variable(VarId::y(2)));
    CHECK(!x1.divided_by(x1y2).has_value());

    // Graded order: unit < degree 1 < degree 2; ties by factor sequence.
    CHECK(monomial_less(one, x1));
    CHECK(monomial_less(x1, Monomial::variable(VarId::y(3))));
    CHECK(monomial_less(Monomial::variable(VarId::y(3)), x1y2));
    CHECK(!monomial_less(x1, x1));
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial x1 = Polynomial::variable(VarId::x(1));
    const Polynomial x2 = Polynomial::variable(VarId::x(2));
    const Polynomial f = x1 * x1 - x2 * x2;
    CHECK(f.degree() == 2);
    CHECK(f.term_count() == 2);
    CHECK(f.coefficient(Monomial::variable(VarId::x(1), 2)) == 1);
    CHECK(f.coefficient(Monomial::variable(VarId::x(2), 2)) == -1);
    CHECK((f - f).is_zero());
    CHECK(f + Polynomial() == f);
    CHECK((f * Scalar(2)) / Scalar(2) == f);
    CHECK((-f) * Scalar(-1) == f);
    CHECK((x1 + x2).pow(2) == x1 * x1 + x1 * x2 * Scalar(2) + x2 * x2);
    CHECK(Polynomial(Scalar(3)).degree() == 0);

    Polynomial g;
    g.add_term(Monomial::variable(VarId::x(1)), Scalar(1));
    g.add_term(Monomial::variable(VarId::x(1)), Scalar(-1));
    CHECK(g.is_zero());
}

TEST_CASE("derivatives and the one-variable right inverse") {
    const VarId v = VarId::x(1);
    const Polynomial f = Polynomial::variable(v, 3);
    CHECK(f.derivative(v) == Polynomial::variable(v, 2) * Scalar(3));
    CHECK(f.derivative(v, 3) == Polynomial(Scalar(6)));
    CHECK(f.derivative(v, 4).is_zero());
    CHECK(f.derivative(VarId::y(1)).is_zero());

    // integral is a right inverse of the derivative on every monomial
    const Polynomial h = Polynomial::variable(v, 2) * Polynomial::variable(VarId::y(1));
    CHECK(integrate(h, v) == Polynomial::variable(v, 3) * Polynomial::variable(VarId::y(1)) / Scalar(3));
    CHECK(integrate(h, v, 2).derivative(v, 2) == h);
    CHECK(integrate(Polynomial(Scalar(1)), v) == Polynomial::variable(v));
}

TEST_CASE("parse and print round trip") {
    const Polynomial f = parse_polynomial("x1^2 - y3");
    CHECK(f == Polynomial::variable(VarId::x(1), 2) - Polynomial::variable(VarId::y(3)));
    CHECK(to_string(f) == "-y3 + x1^2");  // graded order, degree 1 first

    CHECK(to_string(Polynomial()) == "0");
    CHECK(parse_polynomial("0").is_zero());
    CHECK(to_string(parse_polynomial("-3/2*x1^2*y3 + x2*y2")) == "x2*y2 - 3/2*x1^2*y3");
    CHECK(parse_polynomial("1/2 * x0^2") == Polynomial::variable(VarId::x(0), 2) / Scalar(2));
    CHECK(parse_polynomial("x2*y1 + 1/2*x1*x2^2*y2").term_count() == 2);
    CHECK(parse_polynomial(to_string(parse_polynomial("2*x1 - y2^4 + 7/3"))) ==
          parse_polynomial("2*x1 - y2^4 + 7/3"));
    CHECK_THROWS_AS(parse_polynomial("x1 + + y2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1"), ParseError);
}
