#include "doctest.h"
#include "oracles.hpp"

#include "pbw/errors.hpp"
#include "pbw/kgraphs.hpp"
#include "pbw/pbw.hpp"

#include <set>

using namespace pbw;

TEST_CASE("graph counts match brute-force enumeration") {
  for (int m = 0; m <= 3; ++m) {
    const std::size_t want = oracle::count_graphs(m);
    for (GraphMode mode : {GraphMode::out2, GraphMode::in2}) {
      const auto graphs = enumerate_graphs(m, mode);
      CHECK(graphs.size() == want);
      std::set<std::string> keys;
      for (const auto &g : graphs) {
        CHECK(g.valid());
        CHECK(canonical(g).key() == g.key());
        keys.insert(g.key());
      }
      CHECK(keys.size() == graphs.size());
    }
  }
  CHECK(oracle::count_graphs(2) == 21);
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_graphs(4, GraphMode::out2), ResourceError);
  CHECK(enumerate_graphs(1, GraphMode::out2, 1).size() == 2);
}

TEST_CASE("the wedge graph is the Poisson bracket") {
  PoissonBivector a(3);
  const auto ev = even_variables(3);
  a.set(0, 1, SuperPoly::variable(ev, 2) * SuperPoly::variable(ev, 0));
  a.set(1, 2, SuperPoly::variable(ev, 1));
  const auto D = PolyvectorSpace::dual;
  const Polyvector f = Polyvector::term(D, 3, 1, {0, 1}, {}), g = Polyvector::term(D, 3, 1, {2}, {});
  const auto graphs = enumerate_graphs(1, GraphMode::out2);
  REQUIRE(graphs.size() == 2);
  const oracle::Bivector ob = oracle::to_bivector(a);
  const oracle::Poly want = oracle::bracket(ob, oracle::Poly{{{1, 1, 0}, 1}}, oracle::Poly{{{0, 0, 1}, 1}});
  oracle::Poly got, flipped;
  const SuperPoly op0 = graph_operator(graphs[0], {a.polyvector(), f, g});
  const SuperPoly op1 = graph_operator(graphs[1], {a.polyvector(), f, g});
  for (const auto &[m, c] : op0.terms())
    oracle::add(got, std::vector<int>(m.begin(), m.begin() + 3), c);
  for (const auto &[m, c] : op1.terms())
    oracle::add(flipped, std::vector<int>(m.begin(), m.begin() + 3), -c);
  CHECK(got == want);
  CHECK(flipped == want);
}

TEST_CASE("in2 graph on K(alpha) returns alpha_ab of eta") {
  const PoissonBivector a = LieAlgebra::so3().poisson();
  const Polyvector K = koszul_dual(a.polyvector());
  const auto graphs = enumerate_graphs(1, GraphMode::in2);
  auto eta = [](int v) { return Polyvector::term(PolyvectorSpace::shifted, 3, 1, {}, {v}); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      const SuperPoly op = graph_operator(graphs[0], {K, eta(i), eta(j)});
      oracle::Poly got;
      for (const auto &[m, c] : op.terms())
        oracle::add(got, std::vector<int>(m.begin() + 3, m.end()), c);
      CHECK(got == oracle::to_bivector(a)[i][j]);
    }
}

TEST_CASE("graph inputs must have the right shape") {
  const auto graphs = enumerate_graphs(1, GraphMode::out2);
  const Polyvector f = Polyvector::term(PolyvectorSpace::dual, 2, 1, {0}, {});
  const Polyvector v = Polyvector::term(PolyvectorSpace::dual, 2, 1, {}, {0});
  CHECK_THROWS(graph_operator(graphs[0], {v, f, f}));
}
