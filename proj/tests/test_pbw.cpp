#include "doctest.h"

#include "pbw/errors.hpp"
#include "pbw/pbw.hpp"

using namespace pbw;

namespace {

// (word, h-power) -> coefficient
using Lin = std::map<std::pair<Word, int>, Rational>;

void add(Lin &x, const Word &w, int h, const Rational &c) {
  if (c == 0)
    return;
  auto &slot = x[{w, h}];
  slot += c;
  if (slot == 0)
    x.erase({w, h});
}

// Independent normal form for x_i x_j - x_j x_i = h [x_i, x_j]: always
// rewrites the rightmost descent first (the library may pick any order).
Lin rewrite(const LieAlgebra &g, const Word &w, int M) {
  Lin todo, done;
  add(todo, w, 0, 1);
  while (!todo.empty()) {
    auto [key, c] = *todo.begin();
    todo.erase(todo.begin());
    const auto &[word, h] = key;
    int pos = -1;
    for (int p = static_cast<int>(word.size()) - 2; p >= 0 && pos < 0; --p)
      if (word[p] > word[p + 1])
        pos = p;
    if (pos < 0) {
      add(done, word, h, c);
      continue;
    }
    Word swapped = word;
    std::swap(swapped[pos], swapped[pos + 1]);
    add(todo, swapped, h, c);
    if (h + 1 > M)
      continue;
    // x_j x_i = x_i x_j - h [x_i, x_j] with i < j
    for (const auto &[k, v] : g.bracket(word[pos + 1], word[pos])) {
      Word shorter(word.begin(), word.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
      add(todo, shorter, h + 1, -c * v);
    }
  }
  return done;
}

Lin as_lin(const Element &e) {
  Lin x;
  for (const auto &[w, s] : e.terms())
    for (int h = 0; h <= s.order(); ++h)
      add(x, w, h, s.coefficient(h));
  return x;
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out{{}};
  for (int l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const Word &w : out)
      for (int v = 0; v < n; ++v) {
        Word x = w;
        x.push_back(v);
        next.push_back(x);
      }
    out = next;
  }
  return out;
}

} // namespace

TEST_CASE("normal forms in the Heisenberg algebra") {
  const RelationSet r = relations_from_lie(LieAlgebra::heisenberg(), 2);
  const Element yx = normal_form(Word{1, 0}, r);
  Element want(r.ctx, 2);
  want.add(Word{0, 1}, Rational(1));
  want.add(Word{2}, Scalar::hbar_power(1, 2, -1));
  CHECK(yx == want);
  Element want3(r.ctx, 2);
  want3.add(Word{0, 1, 2}, Rational(1));
  want3.add(Word{2, 2}, Scalar::hbar_power(1, 2, -1));
  CHECK(normal_form(Word{2, 1, 0}, r) == want3);
}

TEST_CASE("normal forms agree with an independent rewriting order") {
  for (const LieAlgebra &g : {LieAlgebra::sl2(), LieAlgebra::so3(), LieAlgebra::heisenberg()}) {
    const RelationSet r = relations_from_lie(g, 3);
    Rewriter rw(r);
    for (int len = 0; len <= 4; ++len)
      for (const Word &w : all_words(3, len)) {
        const Element e = Element::monomial(r.ctx, w, Scalar(Rational(1), 3));
        CHECK(as_lin(rw.normal_form(e)) == rewrite(g, w, 3));
      }
  }
}

TEST_CASE("first-order relations use the 1/k! symmetrization") {
  PoissonBivector a(2);
  const auto ev = even_variables(2);
  a.set(0, 1, SuperPoly::variable(ev, 0) * SuperPoly::variable(ev, 1));
  const RelationSet r = relations_order1(a, 2);
  Element want(r.ctx, 2);
  want.add(Word{0, 1}, Scalar::hbar_power(1, 2, Rational(1, 2)));
  want.add(Word{1, 0}, Scalar::hbar_power(1, 2, Rational(1, 2)));
  CHECK(r.relation(0, 1) == want);
}

TEST_CASE("relations must vanish at h = 0") {
  RelationSet r(2, 2);
  Element bad(r.ctx, 2);
  bad.add(Word{0}, Rational(1));
  CHECK_THROWS(r.set(0, 1, bad));
}

TEST_CASE("pbw_check on Lie and non-Jacobi input") {
  const PBWReport ok = pbw_check(relations_from_lie(LieAlgebra::so3(), 3), 4, 3);
  CHECK(ok.pass);
  CHECK(ok.defects.empty());
  CHECK(ok.dims == std::vector<int>{1, 3, 6, 10, 15});

  const PBWReport bad = pbw_check(relations_from_lie(LieAlgebra::non_jacobi_example(), 2), 3, 2);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.defects.size() == 1);
  CHECK(bad.defects[0].first_order == 2);
  CHECK(bad.dims == std::vector<int>{1, 2, 3, 4});
  CHECK(bad.expected == std::vector<int>{1, 3, 6, 10});
}

TEST_CASE("obstruction of the non-Jacobi example is its Jacobiator") {
  const LieAlgebra g = LieAlgebra::non_jacobi_example();
  const auto obs = obstruction(relations_from_lie(g, 2), 2);
  REQUIRE(obs.size() == 1);
  const Element &o = obs.begin()->second;
  const auto jac = g.jacobiator(0, 1, 2);
  CHECK(o.size() == jac.size());
  for (const auto &[k, v] : jac) {
    const Rational c = o.coefficient(Word{k}).coefficient(0);
    CHECK((c == v || c == -v));
  }
}

TEST_CASE("correction solver") {
  PoissonBivector a(2);
  const auto ev = even_variables(2);
  a.set(0, 1, SuperPoly::variable(ev, 0) * SuperPoly::variable(ev, 1));
  const CorrectionResult res = solve_corrections(relations_order1(a, 2), 2, 2);
  CHECK(res.feasible);
  CHECK(pbw_check(res.relations, 4, 2).pass);

  const CorrectionResult lin = solve_corrections(relations_order1(LieAlgebra::sl2().poisson(), 2), 2);
  CHECK(lin.feasible);
  for (const auto &[ij, w] : lin.omega)
    CHECK(w.is_zero());

  const CorrectionResult no =
      solve_corrections(relations_order1(LieAlgebra::non_jacobi_example().poisson(), 2), 2);
  CHECK_FALSE(no.feasible);
  CHECK_FALSE(no.residual.empty());
  CHECK(no.message.find("infeasible within degree bound") != std::string::npos);
}

TEST_CASE("H^0 presentation of the deformed cobar complex") {
  const DeformedCobar dc = deformed_cobar(LieAlgebra::heisenberg(), 2);
  const H0Presentation h0 = h0_presentation(dc, 3, 2);
  CHECK(h0.report.pass);
  Element z(h0.relations.ctx, 2);
  z.add(Word{2}, Scalar::hbar_power(1, 2));
  CHECK(h0.relations.relation(0, 1) == z);
  CHECK(h0.relations.relation(0, 2).is_zero());
}

TEST_CASE("symmetric power dimensions") {
  CHECK(symmetric_power_dimension(3, 5) == 21);
  CHECK(symmetric_power_dimension(2, 4) == 5);
  CHECK(symmetric_power_dimension(4, 0) == 1);
}
