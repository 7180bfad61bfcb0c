#include "doctest.h"
#include "oracles.hpp"

#include "pbw/errors.hpp"
#include "pbw/linalg.hpp"
#include "pbw/tensor.hpp"

using namespace pbw;

TEST_CASE("scalar arithmetic is truncated at h^M") {
  const Scalar a = Scalar::hbar_power(1, 3, 2) + Scalar(Rational(1), 3); // 1 + 2h
  const Scalar b = a * a * a;                                           // (1+2h)^3
  CHECK(b.coefficient(0) == 1);
  CHECK(b.coefficient(1) == 6);
  CHECK(b.coefficient(2) == 12);
  CHECK(b.coefficient(3) == 8);
  const Scalar c = b * Scalar::hbar_power(2, 3);
  CHECK(c.coefficient(2) == 1);
  CHECK(c.coefficient(3) == 6);
  CHECK(c.valuation() == 2);
  CHECK((a - a).is_zero());
  CHECK(a.shifted(1).coefficient(2) == 2);
  CHECK(a.truncated(0) == Scalar(Rational(1), 3));
}

TEST_CASE("scalar exactness with fractions") {
  Scalar s(Rational(1, 3), 1);
  s = s * Rational(3, 7);
  CHECK(s.coefficient(0) == Rational(1, 7));
}

TEST_CASE("words multiply by concatenation") {
  const auto ctx = Context::coordinates(2);
  const Element x = Element::letter(ctx, 0, 1), y = Element::letter(ctx, 1, 1);
  const Element xy = x * y, yx = y * x;
  CHECK(xy != yx);
  CHECK((xy - yx).size() == 2);
  CHECK((xy * x).terms().begin()->first == Word{0, 1, 0});
  CHECK(Element::unit(ctx, 1) * x == x);
}

TEST_CASE("elements from different contexts do not mix") {
  const Element x = Element::letter(Context::coordinates(2), 0, 1);
  const Element z = Element::letter(Context::coordinates(2), 0, 1);
  CHECK_THROWS_AS(x + z, ContextError);
}

TEST_CASE("koszul sign of a transposition") {
  const std::vector<int> perm{1, 0};
  CHECK(koszul_sign(perm, std::vector<int>{1, 1}) == -1);
  CHECK(koszul_sign(perm, std::vector<int>{1, 0}) == 1);
  CHECK(koszul_sign(perm, std::vector<int>{-1, -3}) == -1);
}

TEST_CASE("sym matches the brute-force symmetrization") {
  const auto ctx = Context::coordinates(3);
  for (const std::vector<int> &exps :
       {std::vector<int>{1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {3, 0, 1}, {2, 2, 0}}) {
    Word mono;
    for (int v = 0; v < 3; ++v)
      for (int t = 0; t < exps[v]; ++t)
        mono.push_back(v);
    const Element s = sym(ctx, mono, 0);
    std::map<std::vector<int>, Rational> got;
    for (const auto &[w, c] : s.terms())
      got[w] = c.coefficient(0);
    CHECK(got == oracle::sym(exps));
    // abelianize(sym(m)) = m
    const CommPoly back = abelianize(s);
    REQUIRE(back.size() == 1);
    CHECK(back.begin()->second.coefficient(0) == 1);
  }
}

namespace {

// Dense rational rank by plain Gaussian elimination.
int dense_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0)
      ++p;
    if (p == static_cast<int>(m.size()))
      continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != rank && m[r][c] != 0) {
        const Rational f = m[r][c] / m[rank][c];
        for (int k = 0; k < cols; ++k)
          m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("sparse rank and kernel against dense elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
    std::vector<SparseVec> sparse(rows);
    for (int r = 0; r < rows; ++r) {
      // make some rows combinations of earlier ones
      if (r >= 2 && rng() % 3 == 0) {
        const Rational a(static_cast<int>(rng() % 5) - 2, 1 + rng() % 3);
        for (int c = 0; c < cols; ++c)
          dense[r][c] = dense[r - 1][c] + a * dense[r - 2][c];
      } else {
        for (int c = 0; c < cols; ++c)
          if (rng() % 2)
            dense[r][c] = Rational(static_cast<int>(rng() % 7) - 3, 1 + rng() % 4);
      }
      for (int c = 0; c < cols; ++c)
        if (dense[r][c] != 0)
          sparse[r][c] = dense[r][c];
    }
    const int rank = rank_of(sparse);
    CHECK(rank == dense_rank(dense));
    // kernel of the map e_r -> row r
    const auto ker = kernel_of(sparse);
    CHECK(static_cast<int>(ker.size()) == rows - rank);
    for (const SparseVec &k : ker) {
      SparseVec image;
      for (const auto &[r, c] : k)
        axpy(image, c, sparse[r]);
      CHECK(image.empty());
    }
  }
}

TEST_CASE("row echelon expresses members of the span") {
  RowEchelon ech;
  const SparseVec a{{0, Rational(1)}, {2, Rational(3)}}, b{{1, Rational(2)}, {2, Rational(1)}};
  CHECK(ech.insert(a));
  CHECK(ech.insert(b));
  SparseVec target = a;
  axpy(target, Rational(-5, 2), b);
  CHECK(ech.contains(target));
  CHECK_FALSE(ech.insert(target));
  CHECK_FALSE(ech.contains(SparseVec{{3, Rational(1)}}));
  const auto coeffs = ech.express(target);
  REQUIRE(coeffs.has_value());
  CHECK(coeffs->at(0) == 1);
  CHECK(coeffs->at(1) == Rational(-5, 2));
}
