// Series completion solver and closed-form harmonic bases.

#include <catch2/catch_amalgamated.hpp>

#include "oscrep/flag.hpp"
#include "oscrep/text.hpp"

using namespace oscrep;

TEST_CASE("series completion for split second-order pairs") {
    FlagProblem prob;
    prob.t1 = WeylOperator::partial(VarId::x(1), 2);
    prob.t1_inverse = {{VarId::x(1), 2}};
    prob.t2 = WeylOperator::partial(VarId::x(2), 2);
    prob.seed = parse_polynomial("x2^2");
    const FlagSolution sol = series_complete(prob);
    CHECK(sol.value == parse_polynomial("x2^2 - x1^2"));
    CHECK(sol.annihilated);
    CHECK(sol.steps >= 1);
}

TEST_CASE("series completion against the mixed lowering operator") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const SpecialOperators ops = special_operators(p);
    FlagProblem prob;
    prob.t1 = WeylOperator::partial(VarId::x(2)) * WeylOperator::partial(VarId::y(2));
    prob.t1_inverse = {{VarId::x(2), 1}, {VarId::y(2), 1}};
    prob.t2 = ops.laplace - prob.t1;
    prob.seed = parse_polynomial("x2*y1");
    const FlagSolution sol = series_complete(prob);
    CHECK(sol.value == parse_polynomial("x2*y1 + 1/2*x1*x2^2*y2"));
    CHECK(sol.annihilated);
    CHECK(ops.laplace.apply(sol.value).is_zero());
}

TEST_CASE("series solver edge cases") {
    FlagProblem prob;
    prob.t1 = WeylOperator::partial(VarId::x(1));
    prob.t1_inverse = {{VarId::x(1), 1}};
    prob.t2 = WeylOperator::partial(VarId::x(2));
    prob.seed = Polynomial();
    const FlagSolution zero = series_complete(prob);
    CHECK(zero.value.is_zero());
    CHECK(zero.annihilated);

    // constant-coefficient forcing never terminates: each correction keeps
    // a nonzero image under the second operator
    FlagProblem diverge;
    diverge.t1 = WeylOperator::partial(VarId::x(1));
    diverge.t1_inverse = {{VarId::x(1), 1}};
    diverge.t2 = WeylOperator::identity();
    diverge.seed = Polynomial(Scalar(1));
    diverge.iteration_cap = 5;
    CHECK_THROWS_AS(series_complete(diverge), NonTerminating);

    // a wrong right inverse is rejected up front
    FlagProblem bad;
    bad.t1 = WeylOperator::partial(VarId::x(1));
    bad.t1_inverse = {{VarId::y(1), 1}};
    bad.t2 = WeylOperator::partial(VarId::x(2));
    bad.seed = parse_polynomial("x2");
    CHECK_THROWS_AS(series_complete(bad), std::invalid_argument);

    FlagProblem nocap = prob;
    nocap.seed = parse_polynomial("x2");
    nocap.iteration_cap = 0;
    CHECK_THROWS_AS(series_complete(nocap), std::invalid_argument);
}

TEST_CASE("single-block polynomial solutions") {
    CHECK(classical_harmonic_basis(2, {2, 2}, {0, 2}, 8) == parse_polynomial("x2^2 - x1^2"));
    CHECK(classical_harmonic_basis(2, {2, 2}, {1, 0}, 8) == parse_polynomial("x1"));
    CHECK(classical_harmonic_basis(3, {2, 2, 2}, {0, 1, 1}, 8) == parse_polynomial("x2*x3"));
    CHECK_THROWS_AS(classical_harmonic_basis(2, {2, 2}, {2, 0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(classical_harmonic_basis(2, {2}, {0, 0}, 8), std::invalid_argument);
}

TEST_CASE("series harmonic bases for split blocks") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const HarmonicBasisResult unit = harmonic_basis_sl(p, 0, 0, 0);
    CHECK(unit.basis.dimension() == 1);
    CHECK(unit.basis.contains(Polynomial(Scalar(1))));
    CHECK(unit.kernel_verified);

    const HarmonicBasisResult h11 = harmonic_basis_sl(p, 1, 1, 4);
    CHECK(h11.basis.dimension() == 2);
    CHECK(h11.basis.contains(parse_polynomial("x2*y1 + 1/2*x1*x2^2*y2")));
    CHECK(h11.basis.contains(parse_polynomial("x3*y2 + 1/2*x2*y2^2*y3")));
    CHECK(h11.excluded_over_cap > 0);
    CHECK(h11.kernel_verified);
    const WeylOperator d = special_operators(p).laplace;
    for (const auto& f : h11.basis.polynomials()) CHECK(d.apply(f).is_zero());
}

TEST_CASE("equal-block harmonic bases from product families") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 2, 1, 1);
    const HarmonicBasisResult h = harmonic_basis_sl(p, -1, -1, 2);
    CHECK(h.basis.dimension() == 1);
    CHECK(h.basis.contains(parse_polynomial("x1*y2")));
    // positive total grading is impossible in the equal-block kernel
    CHECK(harmonic_basis_sl(p, 1, 0, 4).basis.dimension() == 0);

    const RepParams pf = RepParams::make(Family::SpecialLinear, 2, 2, 2);
    const HarmonicBasisResult hf = harmonic_basis_sl(pf, -1, 1, 3);
    CHECK(hf.basis.dimension() == 1);
    CHECK(hf.basis.contains(parse_polynomial("x1*y2 - x2*y1")));

    // oracle agreement on a larger equal-block slice
    const RepParams p3 = RepParams::make(Family::SpecialLinear, 3, 2, 2);
    const HarmonicBasisResult g = harmonic_basis_sl(p3, -1, 1, 4);
    const SubspaceBasis oracle = kernel_on_slice(
        special_operators(p3).laplace, slice_enumerate(p3, SliceKey::bigraded(-1, 1), 4));
    CHECK(g.basis.same_span(oracle));
}

TEST_CASE("total-grade harmonic bases") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 2, 1, 1);
    const HarmonicBasisResult h = harmonic_basis_total(p, -2, 2);
    CHECK(h.basis.dimension() == 3);
    for (const auto& f : {"x1^2", "x1*y2", "y2^2"})
        CHECK(h.basis.contains(parse_polynomial(f)));
}

TEST_CASE("extension into the odd direction") {
    const RepParams p = RepParams::make(Family::OrthoOdd, 3, 1, 2);
    CHECK(odd_extend(p, Polynomial(Scalar(1)), 0) == Polynomial(Scalar(1)));
    CHECK(odd_extend(p, parse_polynomial("x2*y2"), 0) == parse_polynomial("x2*y2 - x0^2"));
    CHECK(odd_extend(p, parse_polynomial("x2"), 1) == parse_polynomial("x0*x2"));
    const SpecialOperators ops = special_operators(p);
    for (const char* s : {"x1*x3", "x2*y1", "y1*y2"})
        CHECK(ops.laplace.apply(odd_extend(p, parse_polynomial(s), 0)).is_zero());
    CHECK(ops.laplace.apply(odd_extend(p, parse_polynomial("x1*x3"), 1)).is_zero());
}

TEST_CASE("odd harmonic bases") {
    const RepParams p = RepParams::make(Family::OrthoOdd, 3, 1, 2);
    const SpecialOperators ops = special_operators(p);
    const HarmonicBasisResult h0 = harmonic_basis_odd(p, 0, 2);
    CHECK(h0.basis.contains(parse_polynomial("x2*y3")));
    CHECK(h0.basis.contains(parse_polynomial("x0*x1")));
    for (const auto& f : h0.basis.polynomials()) CHECK(ops.laplace.apply(f).is_zero());

    const HarmonicBasisResult h2 = harmonic_basis_odd(p, 2, 2);
    CHECK(h2.basis.contains(parse_polynomial("x2*y2 - x0^2")));
}
