#include "doctest.h"
#include "oracles.hpp"

#include "pbw/errors.hpp"
#include "pbw/pbw.hpp"
#include "pbw/polyvec.hpp"

using namespace pbw;

namespace {

const auto D = PolyvectorSpace::dual;

Polyvector random_bivector(int n, std::mt19937 &rng) {
  Polyvector p(D, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = 0; t < 2; ++t) {
        std::vector<int> coords;
        const int deg = rng() % 3;
        for (int d = 0; d < deg; ++d)
          coords.push_back(rng() % n);
        std::sort(coords.begin(), coords.end());
        p += Polyvector::term(D, n, Rational(static_cast<int>(rng() % 5) - 2), coords, {i, j});
      }
  return p;
}

PoissonBivector as_bivector(const Polyvector &p) {
  PoissonBivector a(p.dim());
  const auto ev = even_variables(p.dim());
  for (const auto &t : p.terms()) {
    SuperPoly m = SuperPoly::constant(ev, t.coefficient);
    for (int v : t.coords)
      m = m * SuperPoly::variable(ev, v);
    a.set(t.directions[0], t.directions[1], a.entry(t.directions[0], t.directions[1]) + m);
  }
  return a;
}

} // namespace

TEST_CASE("Schouten bracket of vector fields is the commutator") {
  const Polyvector a = Polyvector::term(D, 2, 1, {0}, {1}); // x1 d2
  const Polyvector b = Polyvector::term(D, 2, 1, {1}, {0}); // x2 d1
  const Polyvector want =
      Polyvector::term(D, 2, 1, {0}, {0}) - Polyvector::term(D, 2, 1, {1}, {1});
  CHECK(schouten_bracket(a, b) == want);
}

TEST_CASE("[alpha, alpha] = 2 J with the hand-expanded Jacobiator") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const Polyvector p = random_bivector(3, rng);
    const PoissonBivector a = as_bivector(p);
    CHECK(schouten_bracket(p, p) == jacobiator_trivector(a) * Rational(2));
    const oracle::Bivector ob = oracle::to_bivector(a);
    const oracle::Poly J = oracle::jacobi(ob, 0, 1, 2);
    oracle::Poly got;
    const SuperPoly lib = jacobiator(a, 0, 1, 2);
    for (const auto &[m, c] : lib.terms())
      oracle::add(got, m, c);
    CHECK(got == J);
    CHECK(is_poisson(a).poisson == J.empty());
  }
}

TEST_CASE("Schouten bracket is graded antisymmetric") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Polyvector a = random_bivector(3, rng), b = random_bivector(3, rng);
    // [a,b] = -(-1)^{(p-1)(q-1)} [b,a]
    CHECK(schouten_bracket(a, b) == schouten_bracket(b, a));
    const Polyvector v = Polyvector::term(D, 3, 1, {trial % 3}, {(trial + 1) % 3});
    CHECK(schouten_bracket(v, a) == schouten_bracket(a, v) * Rational(-1));
  }
}

TEST_CASE("random structures and basis changes: Poisson iff Jacobi") {
  std::vector<LieAlgebra> suite;
  std::mt19937 rng(17);
  const LieAlgebra known[] = {LieAlgebra::sl2(), LieAlgebra::so3(), LieAlgebra::heisenberg()};
  for (int t = 0; t < 15; ++t) {
    oracle::Constants c = oracle::zero_constants(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto &[k, v] : known[t % 3].bracket(i, j))
          c[i][j][k] = v;
    std::array<std::array<Rational, 3>, 3> P;
    do
      for (auto &row : P)
        for (auto &x : row)
          x = Rational(static_cast<int>(rng() % 5) - 2);
    while (oracle::det3(P) == 0);
    const oracle::Constants d = oracle::change_basis(c, P);
    LieAlgebra g(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (d[i][j][k] != 0)
            g.set(i, j, k, d[i][j][k]);
    suite.push_back(g);
  }
  for (unsigned seed = 0; seed < 15; ++seed)
    suite.push_back(LieAlgebra::random(3, seed));
  int lie = 0;
  for (const LieAlgebra &g : suite) {
    oracle::Constants c = oracle::zero_constants(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto &[k, v] : g.bracket(i, j))
          c[i][j][k] = v;
    const bool truth = oracle::lie_jacobi(c);
    CHECK(g.check_jacobi().ok == truth);
    CHECK(is_poisson(g.poisson()).poisson == truth);
    lie += truth;
  }
  CHECK(lie >= 15);
  CHECK(lie < static_cast<int>(suite.size()));
}

TEST_CASE("K on monomials and its bracket sign") {
  CHECK(koszul_dual(Polyvector::term(D, 3, 2, {0, 2}, {0, 1})) ==
        Polyvector::term(PolyvectorSpace::shifted, 3, 2, {0, 1}, {0, 2}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const Polyvector a = random_bivector(3, rng), b = random_bivector(3, rng);
    CHECK(schouten_bracket(koszul_dual(a), koszul_dual(b)) ==
          koszul_dual(schouten_bracket(a, b)) * Rational(koszul_bracket_sign));
  }
  CHECK(koszul_convention_dependent(jacobiator_trivector(LieAlgebra::non_jacobi_example().poisson())));
  CHECK_FALSE(koszul_convention_dependent(LieAlgebra::so3().poisson().polyvector()));
}

TEST_CASE("Maurer-Cartan check needs a total-degree-1 element of the shifted space") {
  const Polyvector a = LieAlgebra::so3().poisson().polyvector();
  CHECK_THROWS_AS(maurer_cartan_check(a), GradingError);
  const Polyvector k = koszul_dual(a);
  CHECK(k.total_degree() == 1);
  CHECK(maurer_cartan_check(k).ok);
  CHECK_FALSE(maurer_cartan_check(koszul_dual(LieAlgebra::non_jacobi_example().poisson().polyvector())).ok);
}
