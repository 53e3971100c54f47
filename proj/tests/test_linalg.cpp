// Exact linear algebra, subspace bases, the kernel oracle, and the pairing.

#include <catch2/catch_amalgamated.hpp>

#include "oscrep/linalg.hpp"
#include "oscrep/text.hpp"

using namespace oscrep;

namespace {
Row row(std::initializer_list<long> v) {
    Row r;
    for (long c : v) r.emplace_back(c);
    return r;
}
}  // namespace

TEST_CASE("row reduction and rank") {
    Matrix m{row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})};
    CHECK(rank(m) == 2);
    const auto pivots = rref(m);
    REQUIRE(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m[0] == row({1, 0, 1}));
    CHECK(m[1] == row({0, 1, 1}));
    CHECK(rank(Matrix{}) == 0);
}

TEST_CASE("kernel bases annihilate and have complementary dimension") {
    const Matrix m{row({1, 2, 0}), row({0, 0, 1})};
    const Matrix ker = kernel_basis(m, 3);
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker)
        for (const auto& r : m) {
            Scalar dot(0);
            for (std::size_t i = 0; i < 3; ++i) dot += r[i] * v[i];
            CHECK(dot == 0);
        }
    // no equations: the kernel is everything
    CHECK(kernel_basis(Matrix{}, 2).size() == 2);
    // full rank: trivial kernel
    CHECK(kernel_basis(Matrix{row({1, 0}), row({0, 1})}, 2).empty());
}

TEST_CASE("determinants") {
    CHECK(determinant(Matrix{row({2, 1}), row({1, 1})}) == 1);
    CHECK(determinant(Matrix{row({1, 2}), row({2, 4})}) == 0);
    CHECK(determinant(Matrix{row({-3})}) == -3);
    CHECK_THROWS_AS(determinant(Matrix{row({1, 2})}), std::invalid_argument);
}

TEST_CASE("subspace bases over a slice") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const SliceBasis slice = slice_enumerate(p, SliceKey::bigraded(1, 1), 2);
    const Polynomial a = parse_polynomial("x2*y1 + x3*y2");
    const Polynomial b = parse_polynomial("x2*y1");
    const SubspaceBasis basis = SubspaceBasis::from_polynomials(slice, {a, b, a + b});
    CHECK(basis.dimension() == 2);
    CHECK(basis.contains(parse_polynomial("x3*y2")));
    CHECK(!basis.contains(parse_polynomial("x2*y2")));
    const auto coords = basis.coordinates_of(a * Scalar(3));
    REQUIRE(coords.has_value());
    Polynomial rebuilt;
    for (std::size_t i = 0; i < basis.dimension(); ++i)
        rebuilt += basis.polynomial(i) * (*coords)[i];
    CHECK(rebuilt == a * Scalar(3));
    CHECK(basis.same_span(SubspaceBasis::from_polynomials(slice, {b, a - b})));
    CHECK(!basis.same_span(SubspaceBasis::from_polynomials(slice, {b})));
    // vectors outside the slice are rejected
    CHECK_THROWS_AS(SubspaceBasis::from_polynomials(slice, {parse_polynomial("x1")}),
                    std::invalid_argument);
}

TEST_CASE("kernel of the lowering operator on a slice") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const WeylOperator d = special_operators(p).laplace;
    // the trivial slice
    const SubspaceBasis k0 =
        kernel_on_slice(d, slice_enumerate(p, SliceKey::bigraded(0, 0), 0));
    CHECK(k0.dimension() == 1);
    CHECK(k0.contains(Polynomial(Scalar(1))));
    // completions of the two low seeds are in-cap kernel members at cap 4
    const SubspaceBasis k11 =
        kernel_on_slice(d, slice_enumerate(p, SliceKey::bigraded(1, 1), 4));
    CHECK(k11.dimension() == 2);
    CHECK(k11.contains(parse_polynomial("x2*y1 + 1/2*x1*x2^2*y2")));
    CHECK(k11.contains(parse_polynomial("x3*y2 + 1/2*x2*y2^2*y3")));
    // an operator that raises degree escapes the slice truncation
    const WeylOperator eta = special_operators(p).dual;
    CHECK_THROWS_AS(kernel_on_slice(eta, slice_enumerate(p, SliceKey::bigraded(1, 1), 2)),
                    DegreeEscape);
}

TEST_CASE("signed pairing on monomials") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const Polynomial x1x2 = parse_polynomial("x1*x2");
    CHECK(bilinear_form(x1x2, x1x2, p) == -1);
    CHECK(bilinear_form(parse_polynomial("y1"), parse_polynomial("y1"), p) == 1);
    CHECK(bilinear_form(parse_polynomial("y3"), parse_polynomial("y3"), p) == -1);
    CHECK(bilinear_form(parse_polynomial("x2^3"), parse_polynomial("x2^3"), p) == 6);
    CHECK(bilinear_form(parse_polynomial("x1"), parse_polynomial("x2"), p) == 0);
    CHECK(bilinear_form(parse_polynomial("x1^2"), parse_polynomial("x1^2"), p) == 2);
    // the zeroth direction carries no sign
    const RepParams podd = RepParams::make(Family::OrthoOdd, 3, 1, 2);
    CHECK(bilinear_form(parse_polynomial("x0^2"), parse_polynomial("x0^2"), podd) == 2);
}

TEST_CASE("pairing adjointness reference instance") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const Polynomial f = parse_polynomial("x1*x2");
    const Polynomial g = Polynomial(Scalar(1));
    const WeylOperator a = unit_action(p, 1, 2);
    const WeylOperator at = unit_action(p, 2, 1);
    CHECK(a.apply(f) == g);
    CHECK(at.apply(g) == -f);
    CHECK(bilinear_form(a.apply(f), g, p) == 1);
    CHECK(bilinear_form(f, at.apply(g), p) == 1);
}

TEST_CASE("gram matrices") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const std::vector<Polynomial> basis{parse_polynomial("x1"), parse_polynomial("x2")};
    const Matrix g = gram_matrix(basis, p);
    CHECK(g == Matrix{row({-1, 0}), row({0, 1})});
    CHECK(determinant(g) == -1);
}
