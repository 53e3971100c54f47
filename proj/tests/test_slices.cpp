// Graded slice enumeration against a brute-force oracle.

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oscrep/slices.hpp"

using namespace oscrep;

namespace {

// Brute force: every monomial of degree <= cap in the instance's variables,
// filtered by the slice predicate computed directly from the gradings.
void brute(const RepParams& p, const std::vector<VarId>& vars, std::size_t i, Monomial m,
           unsigned cap, const SliceKey& key, std::vector<Monomial>& out) {
    if (i == vars.size()) {
        const long l1 = grade_l1(p, m);
        const long l2 = p.has_y() ? grade_l2(p, m) : 0;
        const long x0 = p.has_x0() ? static_cast<long>(m.exponent(VarId::x(0))) : 0;
        bool in = false;
        switch (key.kind) {
            case SliceKey::Kind::Bigraded: in = (l1 == key.l1 && l2 == key.l2); break;
            case SliceKey::Kind::Total: in = (l1 + l2 == key.k); break;
            case SliceKey::Kind::OddTotal: in = (l1 + l2 + x0 == key.k); break;
        }
        if (in) out.push_back(m);
        return;
    }
    for (unsigned e = 0; m.degree() + e <= cap; ++e)
        brute(p, vars, i + 1, e == 0 ? m : m.times(Monomial::variable(vars[i], e)), cap, key, out);
}

std::vector<Monomial> brute_slice(const RepParams& p, const SliceKey& key, unsigned cap) {
    std::vector<Monomial> out;
    brute(p, p.variables(), 0, Monomial(), cap, key, out);
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

}  // namespace

TEST_CASE("slice keys render canonically") {
    CHECK(SliceKey::bigraded(-1, 0).to_string() == "B<-1,0>");
    CHECK(SliceKey::total(2).to_string() == "B<2>");
    CHECK(SliceKey::odd_total(0).to_string() == "B'<0>");
}

TEST_CASE("bigraded slices match brute force") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    for (long l1 = -2; l1 <= 2; ++l1)
        for (long l2 = -2; l2 <= 2; ++l2) {
            const SliceKey key = SliceKey::bigraded(l1, l2);
            const SliceBasis s = slice_enumerate(p, key, 4);
            CHECK(s.monomials == brute_slice(p, key, 4));
        }
}

TEST_CASE("reference slices") {
    const RepParams p = RepParams::make(Family::SpecialLinear, 3, 1, 2);
    const SliceBasis s = slice_enumerate(p, SliceKey::bigraded(-1, 0), 1);
    REQUIRE(s.monomials.size() == 1);
    CHECK(s.monomials[0] == Monomial::variable(VarId::x(1)));
    // degree parity: a (1,1) slice holds only even degrees
    for (const auto& m : slice_enumerate(p, SliceKey::bigraded(1, 1), 5).monomials)
        CHECK(m.degree() % 2 == 0);
}

TEST_CASE("total slices match brute force") {
    const RepParams p = RepParams::make(Family::Symplectic, 2, 2, 2);
    for (long k = -2; k <= 2; ++k) {
        const SliceKey key = SliceKey::total(k);
        CHECK(slice_enumerate(p, key, 4).monomials == brute_slice(p, key, 4));
    }
}

TEST_CASE("odd total slices include the extra direction") {
    const RepParams p = RepParams::make(Family::OrthoOdd, 3, 1, 2);
    const SliceKey key = SliceKey::odd_total(0);
    const SliceBasis s = slice_enumerate(p, key, 3);
    CHECK(s.monomials == brute_slice(p, key, 3));
    // x0^1 x1^1 has total grade 1 - 1 = 0 and must be present
    const Monomial probe = Monomial::variable(VarId::x(0)).times(Monomial::variable(VarId::x(1)));
    CHECK(std::find(s.monomials.begin(), s.monomials.end(), probe) != s.monomials.end());
}

TEST_CASE("slice enumeration validates the instance") {
    CHECK_THROWS_AS(
        slice_enumerate(RepParams::make(Family::SpecialLinear, 3, 1, 2), SliceKey::odd_total(0), 2),
        std::invalid_argument);
    CHECK_THROWS_AS(
        slice_enumerate(RepParams::make_single_block(3, 1), SliceKey::bigraded(0, 0), 2),
        std::invalid_argument);
}

TEST_CASE("slices are sorted and duplicate-free") {
    const RepParams p = RepParams::make(Family::OrthoEven, 2, 1, 1);
    const SliceBasis s = slice_enumerate(p, SliceKey::total(0), 6);
    for (std::size_t i = 1; i < s.monomials.size(); ++i)
        CHECK(monomial_less(s.monomials[i - 1], s.monomials[i]));
}
