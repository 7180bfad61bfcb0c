#include "doctest.h"

#include "pbw/coalg.hpp"
#include "pbw/complexes.hpp"
#include "pbw/errors.hpp"
#include "pbw/pbw.hpp"

using namespace pbw;

namespace {

Element one_word(const CobarComplex &c, std::initializer_list<BasisKey> keys, const Rational &q = 1) {
  Word w;
  for (const auto &k : keys)
    w.push_back(c.letter(k));
  return c.word(w, q);
}

} // namespace

TEST_CASE("exterior coproduct is coassociative; the flipped sign is caught") {
  for (int n = 1; n <= 4; ++n) {
    const CoalgebraSpec spec{CoalgebraKind::exterior, true, n};
    CHECK(check_coassociativity(spec, n).ok);
    const CoalgebraSpec sym{CoalgebraKind::symmetric, true, n};
    CHECK(check_coassociativity(sym, 4).ok);
  }
  const auto bad = check_coassociativity({CoalgebraKind::exterior, true, 3}, 3, ShuffleSign::flipped);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.has_value());
}

TEST_CASE("reduced coproduct of the exterior generators") {
  const CoalgebraSpec spec{CoalgebraKind::exterior, true, 2};
  const CoTensor d = coproduct(spec, {0, 1});
  const CoTensor want{{{{0}, {1}}, Rational(1)}, {{{1}, {0}}, Rational(-1)}};
  CHECK(d == want);
  CHECK(coproduct(spec, {0}).empty());
}

TEST_CASE("reduced coalgebras are cocomplete") {
  const CoalgebraSpec ext{CoalgebraKind::exterior, true, 3};
  CHECK(cocompleteness_filtration(ext, {0, 1, 2}, 5) == 3);
  CHECK(cocompleteness_filtration(ext, {1}, 5) == 1);
  const CoalgebraSpec sym{CoalgebraKind::symmetric, true, 2};
  CHECK(cocompleteness_filtration(sym, {0, 0, 1, 1}, 6) == 4);
  CHECK_THROWS(cocompleteness_filtration({CoalgebraKind::symmetric, false, 2}, {0}, 3));
}

TEST_CASE("cobar differential on the generators of the exterior coalgebra") {
  const CobarComplex c2 = exterior_cobar(2);
  CHECK(c2.differential(one_word(c2, {{0}})).is_zero());
  CHECK(c2.differential(one_word(c2, {{0, 1}})) ==
        one_word(c2, {{0}, {1}}) - one_word(c2, {{1}, {0}}));

  // d(xi123) = x1 xi23 + x2 xi31 + x3 xi12 + xi23 x1 + xi31 x2 + xi12 x3, xi31 = -xi13
  const CobarComplex c3 = exterior_cobar(3);
  const Element want = one_word(c3, {{0}, {1, 2}}) - one_word(c3, {{1}, {0, 2}}) +
                       one_word(c3, {{2}, {0, 1}}) + one_word(c3, {{1, 2}, {0}}) -
                       one_word(c3, {{0, 2}, {1}}) + one_word(c3, {{0, 1}, {2}});
  CHECK(c3.differential(one_word(c3, {{0, 1, 2}})) == want);
}

TEST_CASE("cobar d^2 = 0 in both sign frames") {
  for (SignRule frame : {SignRule::positional, SignRule::koszul}) {
    const CobarComplex c = exterior_cobar(3, frame);
    for (int w = 1; w <= 4; ++w)
      for (int d = 1 - w; d <= 0; ++d)
        CHECK_FALSE(square_zero_witness(c, d, w, false).has_value());
  }
}

TEST_CASE("truncated cohomology of the exterior cobar complex") {
  const CobarComplex c = exterior_cobar(2);
  const CohomologySlice h = truncated_cohomology(c, 0, 2, true);
  CHECK(h.dimension == 3);
  CHECK(h.representatives.size() == 3);
  for (const Element &r : h.representatives)
    CHECK(c.differential(r).is_zero());
  for (int w = 1; w <= 4; ++w)
    CHECK(truncated_cohomology(c, -1, w).dimension == 0);
  CHECK(truncated_cohomology(exterior_cobar(3), -1, 3).dimension == 0);
}

TEST_CASE("slice cap raises a resource error") {
  setenv("PBW_MAX_BASIS", "5", 1);
  CHECK_THROWS_AS(truncated_cohomology(exterior_cobar(3), 0, 4), ResourceError);
  unsetenv("PBW_MAX_BASIS");
}

TEST_CASE("bar complex: d^2 = 0 and dh + hd = id") {
  const BarComplex b(2, 3);
  for (int len = 1; len <= 3; ++len)
    for (int deg = 0; deg <= 3; ++deg)
      for (const Word &w : b.basis(len, deg)) {
        const Element x = Element::monomial(b.context(), w, Scalar(Rational(1), 0));
        CHECK(b.differential(b.differential(x)).is_zero());
        CHECK(b.differential(b.homotopy(x)) + b.homotopy(b.differential(x)) == x);
      }
  const Element one = b.word({{}});
  CHECK(b.homotopy(one) == b.word({{}, {}}));
}

TEST_CASE("bar products beyond the truncation throw") {
  const BarComplex b(1, 2);
  CHECK_THROWS_AS(b.differential(b.word({{0, 0}, {0}})), DegreeOverflow);
}

TEST_CASE("deformed cobar: square-zero iff Jacobi") {
  CHECK(deformed_cobar(LieAlgebra::so3(), 3, 4).square_zero);
  const DeformedCobar bad = deformed_cobar(LieAlgebra::non_jacobi_example(), 3, 3);
  CHECK_FALSE(bad.square_zero);
  REQUIRE(bad.witness.has_value());
  CHECK(word_str(*bad.complex.context(), *bad.witness) == "xi123");
}

TEST_CASE("d_h-cycles lift order by order") {
  const DeformedCobar dc = deformed_cobar(LieAlgebra::heisenberg(), 3);
  const CobarComplex &c = dc.complex;
  // symmetrized x1 x2 is a d_0-cycle
  const Element x = (one_word(c, {{0}, {1}}) + one_word(c, {{1}, {0}})).scaled(Rational(1, 2));
  CHECK(c.undeformed(x).is_zero());
  const LiftResult res = lift_cycle(c, x, 2);
  CHECK(res.ok);
  CHECK(c.differential(res.lift).truncated(2).is_zero());
  CHECK(res.lift.truncated(0) == x.truncated(0));
}
