// Structure verification: brackets, identities, equivariance, adjointness,
// lowering laws, decomposition, audits, transition identities, and singular
// vectors.

#include <catch2/catch_amalgamated.hpp>

#include "oscrep/verify.hpp"

using namespace oscrep;

namespace {
const RepParams SL312 = RepParams::make(Family::SpecialLinear, 3, 1, 2);
const RepParams SL211 = RepParams::make(Family::SpecialLinear, 2, 1, 1);
const RepParams SL222 = RepParams::make(Family::SpecialLinear, 2, 2, 2);
const RepParams SO312 = RepParams::make(Family::OrthoEven, 3, 1, 2);
const RepParams SODD312 = RepParams::make(Family::OrthoOdd, 3, 1, 2);
const RepParams SP312 = RepParams::make(Family::Symplectic, 3, 1, 2);
}  // namespace

TEST_CASE("grading helpers") {
    CHECK(total_grade(SL312, parse_polynomial("x2*y1")) == 2);
    CHECK(total_grade(SL312, parse_polynomial("x1*x3")) == 0);
    CHECK(!total_grade(SL312, parse_polynomial("x1 + x2")).has_value());
    CHECK(total_grade(SODD312, parse_polynomial("x0*x1")) == 0);
    CHECK(bigrade(SL312, parse_polynomial("x2*y1 + x3*y2")) == std::pair<long, long>{1, 1});
    CHECK(!bigrade(SL312, parse_polynomial("x1 + y1")).has_value());
    CHECK(!bigrade(SODD312, parse_polynomial("x0")).has_value());
}

TEST_CASE("bracket compatibility across families") {
    for (const auto& p : {SL312, SO312, SODD312, SP312, SL211, SL222}) {
        const CheckItem it = check_homomorphism(p);
        INFO(it.params << ": " << it.detail);
        CHECK(it.pass);
    }
    CHECK(check_homomorphism(RepParams::make_single_block(3, 1)).pass);
}

TEST_CASE("a corrupted realization is flagged") {
    const AbstractElement e12 = AbstractElement::unit(1, 2);
    const AbstractElement e23 = AbstractElement::unit(2, 3);
    const WeylOperator good12 = rho(SL312, e12);
    const WeylOperator good23 = rho(SL312, e23);
    CHECK(bracket_defect(SL312, e12, e23, good12, good23).is_zero());
    CHECK(!bracket_defect(SL312, e12, e23, -good12, good23).is_zero());
}

TEST_CASE("operator identities hold for every block shape") {
    for (const auto& p : {SL312, SL211, SL222, SO312, SODD312, SP312,
                          RepParams::make(Family::SpecialLinear, 4, 2, 3)})
        CHECK(all_pass(check_sl2_identities(p)));
    CHECK_THROWS_AS(check_sl2_identities(RepParams::make_single_block(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("equivariance per family") {
    for (const auto& p : {SL312, SL211, SL222, SO312, SODD312, SP312,
                          RepParams::make(Family::OrthoEven, 2, 1, 1),
                          RepParams::make(Family::Symplectic, 2, 2, 2),
                          RepParams::make(Family::OrthoOdd, 2, 1, 2)}) {
        const CheckItem it = check_equivariance(p);
        INFO(it.params << ": " << it.detail);
        CHECK(it.pass);
    }
    // the x-side grading alone does not commute with the even orthogonal
    // action: this transporting element shifts the bigrading
    const WeylOperator xi = detail::rho_pair(SO312, 1, 3 + 2, -1, 2, 3 + 1);
    CHECK(!bracket(special_operators(SO312).flat, xi).is_zero());
    // nor do the lowering/dual operators commute with the symplectic action
    const WeylOperator sp_gen = rho(SP312, AbstractElement::unit(1, 3 + 1));
    CHECK(!bracket(special_operators(SP312).laplace, sp_gen).is_zero());
}

TEST_CASE("randomized adjointness trials") {
    for (const auto& p : {SL312, SO312, SODD312, SP312}) {
        const CheckItem it = check_adjointness(p, 4, 4);
        INFO(it.params << ": " << it.detail);
        CHECK(it.pass);
    }
    CHECK(check_adjointness(RepParams::make_single_block(3, 2), 4, 4).pass);
}

TEST_CASE("lowering law reference values") {
    // constant 2 at height 1 on a grade-1 kernel element
    CHECK(all_pass(check_lowering(SL312, parse_polynomial("x2"), 1)));
    // constant n2 - n1 = 1 on the unit
    CHECK(all_pass(check_lowering(SL312, Polynomial(Scalar(1)), 1)));
    // grade -2 hits the vanishing window at height 2
    CHECK(all_pass(check_lowering(SL312, parse_polynomial("x1*y3"), 1)));
    CHECK(all_pass(check_lowering(SL312, parse_polynomial("x1*y3"), 2)));
    CHECK_THROWS_AS(check_lowering(SL312, parse_polynomial("x2*y2"), 1), InputNotHarmonic);
    CHECK_THROWS_AS(check_lowering(SL312, parse_polynomial("x2"), 0), std::invalid_argument);
    // odd family follows the doubled law
    CHECK(all_pass(check_lowering(SODD312, parse_polynomial("x2"), 1)));
    CHECK(all_pass(check_lowering(SODD312, odd_extend(SODD312, parse_polynomial("x1*x3"), 0), 2)));
}

TEST_CASE("harmonic decomposition peels exactly") {
    const DecompositionResult d = harmonic_decompose(SL312, parse_polynomial("x1*x3"));
    REQUIRE(d.components.size() == 2);
    CHECK(d.grading == 0);
    CHECK(d.components[0].m == 1);
    CHECK(d.components[0].h == parse_polynomial("x1*y3"));
    CHECK(d.components[1].m == 0);
    CHECK(d.components[1].h == parse_polynomial("-y1*y3 - x1*x2*y2*y3"));

    const DecompositionResult unit = harmonic_decompose(SL312, Polynomial(Scalar(1)));
    REQUIRE(unit.components.size() == 1);
    CHECK(unit.components[0].m == 0);
    CHECK(unit.components[0].h == Polynomial(Scalar(1)));

    CHECK(harmonic_decompose(SL312, Polynomial()).components.empty());
    CHECK_THROWS_AS(harmonic_decompose(SL312, parse_polynomial("x2*y2")), RegimeViolation);
    CHECK_THROWS_AS(harmonic_decompose(SL312, parse_polynomial("x1 + x2")),
                    std::invalid_argument);

    // odd family: reconstruction check on a small slice element
    const Polynomial f = parse_polynomial("x0^2*x1*y3");
    const DecompositionResult od = harmonic_decompose(SODD312, f);
    Polynomial sum;
    const SpecialOperators ops = special_operators(SODD312);
    for (const auto& c : od.components) {
        Polynomial t = c.h;
        for (unsigned i = 0; i < c.m; ++i) t = ops.dual.apply(t);
        sum += t;
        CHECK(ops.laplace.apply(c.h).is_zero());
    }
    CHECK(sum == f);
}

TEST_CASE("decomposition audits") {
    CHECK(all_pass(decomposition_audit(SL312, SliceKey::bigraded(0, 0), 4)));
    CHECK(all_pass(decomposition_audit(SL312, SliceKey::bigraded(-1, 0), 3)));
    CHECK(all_pass(decomposition_audit(RepParams::make(Family::OrthoEven, 2, 1, 1),
                                       SliceKey::total(0), 4)));
    CHECK(all_pass(decomposition_audit(SODD312, SliceKey::odd_total(0), 3)));
}

TEST_CASE("symplectic zero-slice split") {
    const CheckList items = sp_zero_split_audit(RepParams::make(Family::Symplectic, 2, 2, 2), 4);
    for (const auto& it : items) {
        INFO(it.check << ": " << it.detail);
        CHECK(it.pass);
    }
    CHECK_THROWS_AS(sp_zero_split_audit(SP312, 2), std::invalid_argument);
}

TEST_CASE("transition identity suites") {
    const RepParams SO412 = RepParams::make(Family::OrthoEven, 4, 1, 2);
    const RepParams SO322 = RepParams::make(Family::OrthoEven, 3, 2, 2);
    const std::vector<std::pair<std::string, RepParams>> runs{
        {"so-even-1", SO312}, {"so-even-2", SO412}, {"so-even-3", SO312},
        {"so-even-4", SO312}, {"so-even-5", SO412}, {"so-even-6", SO312},
        {"so-even-7", SO322}, {"so-even-8", SO322},
        {"so-even-9", RepParams::make(Family::OrthoEven, 3, 1, 1)},
        {"so-odd-1", SODD312}, {"so-odd-2", SODD312}, {"sp-1", SP312},
        {"sp-2", SP312}, {"sp-3", SP312}, {"sp-4", SP312},
        {"sl-low-1", SL312}, {"so-odd-low", SODD312}};
    for (const auto& [suite, p] : runs) {
        const CheckList items = transition_identities(p, suite);
        CHECK(!items.empty());
        for (const auto& it : items) {
            INFO(suite << " at " << it.params << " [" << it.check << " " << it.detail << "]");
            CHECK(it.pass);
        }
    }
    CHECK_THROWS_AS(transition_identities(SO312, "so-even-7"), SideConditionViolation);
    CHECK_THROWS_AS(transition_identities(SL312, "so-odd-1"), SideConditionViolation);
    CHECK_THROWS_AS(transition_identities(SL312, "nope"), std::invalid_argument);
    CHECK(transition_suites().size() == 17);
}

TEST_CASE("singular vectors in reference slices") {
    const SingularReport r1 = singular_vectors(SL312, SliceKey::bigraded(-1, 0), 1);
    REQUIRE(r1.vectors.size() == 1);
    CHECK(r1.vectors[0].vector == parse_polynomial("x1"));
    CHECK(!r1.has_catalog);  // adjacent split blocks carry no closed catalog

    const SingularReport r2 = singular_vectors(SL211, SliceKey::bigraded(-1, -1), 2);
    REQUIRE(r2.vectors.size() == 1);
    CHECK(r2.vectors[0].vector == parse_polynomial("x1*y2"));
    CHECK(r2.has_catalog);
    CHECK(r2.catalog_complete);
    CHECK(r2.vectors[0].catalog_match);

    // equal full blocks: both members, then the kernel-restricted one
    const SingularReport r3 = singular_vectors(SL222, SliceKey::bigraded(-1, 1), 2);
    CHECK(r3.vectors.size() == 2);
    CHECK(r3.catalog_complete);
    const SingularReport r3h = singular_vectors(SL222, SliceKey::bigraded(-1, 1), 2, true);
    REQUIRE(r3h.vectors.size() == 1);
    CHECK(r3h.vectors[0].vector == parse_polynomial("x1*y2 - x2*y1"));
    CHECK(r3h.catalog_complete);
}

TEST_CASE("singular vectors with catalogs at a wide split") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 4, 1, 3);
    const SingularReport rb = singular_vectors(p, SliceKey::bigraded(-1, 0), 3);
    CHECK(rb.has_catalog);
    CHECK(rb.catalog_complete);
    for (const auto& v : rb.vectors) CHECK(v.catalog_match);

    const SingularReport rh = singular_vectors(p, SliceKey::bigraded(0, -1), 4, true);
    CHECK(rh.has_catalog);
    REQUIRE(rh.vectors.size() == 1);
    CHECK(rh.vectors[0].vector == parse_polynomial("y4"));
    CHECK(rh.catalog_complete);
}

TEST_CASE("explicit product spans match the kernel oracle") {
    const RepParams p322 = RepParams::make(Family::SpecialLinear, 3, 2, 2);
    CHECK(all_pass(explicit_spans(p322, SpanFamily::XYProducts, 1, 1, 4)));
    CHECK(all_pass(explicit_spans(p322, SpanFamily::XCross, 0, 1, 4)));
    CHECK(all_pass(explicit_spans(RepParams::make(Family::SpecialLinear, 3, 1, 1),
                                  SpanFamily::YCross, 1, 1, 4)));
    CHECK(all_pass(explicit_spans(SL222, SpanFamily::FullBlock, 1, 1, 4)));
    CHECK_THROWS_AS(explicit_spans(SL211, SpanFamily::XCross, 0, 1, 4), PatternMismatch);
    CHECK_THROWS_AS(explicit_spans(SL312, SpanFamily::XYProducts, 1, 1, 4),
                    std::invalid_argument);
}

TEST_CASE("check items serialize to the report shape") {
    const CheckItem it{"demo-check", "sl(n=3,n1=1,n2=2)", "B<0,0>", 4, true, "3 monomials"};
    const nlohmann::json j = check_to_json(it);
    CHECK(j.at("check") == "demo-check");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("cap") == 4);
    CHECK(checks_to_json({it, it}).size() == 2);
}
