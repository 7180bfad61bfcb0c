#include "pbw/pbw.hpp"

#include "pbw/errors.hpp"
#include "pbw/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace pbw {

void LieAlgebra::set(int i, int j, int k, const Rational &c) {
  if (i == j)
    throw std::invalid_argument("LieAlgebra::set: [x_i, x_i] is zero");
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
    throw std::out_of_range("LieAlgebra::set: index");
  Rational v = i < j ? c : Rational(-c);
  auto &row = constants[{std::min(i, j), std::max(i, j)}];
  if (sgn(v) == 0)
    row.erase(k);
  else
    row[k] = v;
}

std::map<int, Rational> LieAlgebra::bracket(int i, int j) const {
  if (i == j)
    return {};
  auto it = constants.find({std::min(i, j), std::max(i, j)});
  if (it == constants.end())
    return {};
  std::map<int, Rational> r = it->second;
  if (i > j)
    for (auto &[k, c] : r)
      c = -c;
  return r;
}

namespace {

void accumulate(std::map<int, Rational> &acc, const std::map<int, Rational> &v,
                const Rational &c) {
  for (const auto &[k, q] : v) {
    acc[k] += c * q;
    if (sgn(acc[k]) == 0)
      acc.erase(k);
  }
}

} // namespace

std::map<int, Rational> LieAlgebra::jacobiator(int i, int j, int k) const {
  std::map<int, Rational> acc;
  auto term = [&](int a, int b, int c) {
    for (const auto &[m, q] : bracket(b, c))
      accumulate(acc, bracket(a, m), q);
  };
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  return acc;
}

LieAlgebra::JacobiCheck LieAlgebra::check_jacobi() const {
  JacobiCheck r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto v = jacobiator(i, j, k);
        if (!v.empty()) {
          r.ok = false;
          r.witness = std::array<int, 3>{i, j, k};
          r.value = std::move(v);
          return r;
        }
      }
  return r;
}

PoissonBivector LieAlgebra::poisson() const {
  PoissonBivector a(n);
  const auto ev = even_variables(n);
  for (const auto &[ij, row] : constants) {
    SuperPoly p(ev);
    for (const auto &[k, c] : row)
      p += SuperPoly::variable(ev, k) * c;
    if (!p.is_zero())
      a.set(ij.first, ij.second, p);
  }
  return a;
}

LieAlgebra LieAlgebra::sl2() {
  LieAlgebra g(3); // e, f, h
  g.set(0, 1, 2, 1);
  g.set(2, 0, 0, 2);
  g.set(2, 1, 1, -2);
  return g;
}

LieAlgebra LieAlgebra::heisenberg() {
  LieAlgebra g(3);
  g.set(0, 1, 2, 1);
  return g;
}

LieAlgebra LieAlgebra::so3() {
  LieAlgebra g(3);
  g.set(0, 1, 2, 1);
  g.set(1, 2, 0, 1);
  g.set(2, 0, 1, 1);
  return g;
}

LieAlgebra LieAlgebra::non_jacobi_example() {
  LieAlgebra g(3);
  g.set(0, 1, 0, 1);
  g.set(1, 2, 1, 1);
  g.set(2, 0, 2, 1);
  return g;
}

LieAlgebra LieAlgebra::random(int n, unsigned seed, int range) {
  LieAlgebra g(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-range, range);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int c = coef(rng);
        if (c != 0)
          g.set(i, j, k, c);
      }
  return g;
}

RelationSet::RelationSet(int dim, int hbar_order)
    : n(dim), order(hbar_order), ctx(Context::coordinates(dim)) {}

Element RelationSet::relation(int i, int j) const {
  auto it = rhs.find({std::min(i, j), std::max(i, j)});
  if (it == rhs.end())
    return Element(ctx, order);
  return i < j ? it->second : -it->second;
}

void RelationSet::set(int i, int j, const Element &r) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("RelationSet::set: bad index pair");
  if (r.context() != ctx || r.order() != order)
    throw ContextError("RelationSet::set: relation over a different context or order");
  for (const auto &[w, c] : r.terms())
    if (sgn(c.coefficient(0)) != 0)
      throw PreconditionError("RelationSet::set: R_ij must vanish at h = 0");
  Element v = i < j ? r : -r;
  if (v.is_zero())
    rhs.erase({std::min(i, j), std::max(i, j)});
  else
    rhs.insert_or_assign({std::min(i, j), std::max(i, j)}, v);
}

RelationSet RelationSet::with_order(int m) const {
  RelationSet r(n, m);
  r.ctx = ctx;
  for (const auto &[ij, e] : rhs) {
    Element v(ctx, m);
    for (const auto &[w, c] : e.terms()) {
      Scalar s(m);
      for (int k = 0; k <= std::min(m, c.order()); ++k)
        s.set(k, c[k]);
      v.add(w, s);
    }
    if (!v.is_zero())
      r.rhs.emplace(ij, std::move(v));
  }
  return r;
}

RelationSet relations_from_lie(const LieAlgebra &g, int hbar_order) {
  if (hbar_order < 1)
    throw std::invalid_argument("relations_from_lie: h order must be at least 1");
  RelationSet r(g.n, hbar_order);
  for (const auto &[ij, row] : g.constants) {
    Element e(r.ctx, hbar_order);
    for (const auto &[k, c] : row)
      e.add(Word{k}, Scalar::hbar_power(1, hbar_order, c));
    if (!e.is_zero())
      r.set(ij.first, ij.second, e);
  }
  return r;
}

RelationSet relations_order1(const PoissonBivector &a, int hbar_order) {
  if (hbar_order < 1)
    throw std::invalid_argument("relations_order1: h order must be at least 1");
  RelationSet r(a.n, hbar_order);
  for (const auto &[ij, p] : a.entries) {
    CommPoly cp;
    for (const auto &[m, c] : p.terms()) {
      Word w;
      for (int v = 0; v < a.n; ++v)
        for (int e = 0; e < m[v]; ++e)
          w.push_back(v);
      cp.try_emplace(w, Scalar(hbar_order)).first->second +=
          Scalar::hbar_power(1, hbar_order, c);
    }
    Element e = sym(r.ctx, cp, hbar_order);
    if (!e.is_zero())
      r.set(ij.first, ij.second, e);
  }
  return r;
}

Rewriter::Rewriter(const RelationSet &r) : r_(r) {}

const Element &Rewriter::normal_form(const Word &w, int budget) {
  auto key = std::make_pair(w, budget);
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;
  const int M = r_.order;
  std::size_t p = 0;
  while (p + 1 < w.size() && w[p] <= w[p + 1])
    ++p;
  Element res(r_.ctx, M);
  if (p + 1 >= w.size()) {
    res.add(w, Scalar(1, M));
  } else {
    const int j = w[p], i = w[p + 1];
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    res = normal_form(swapped, budget);
    const Element rel = r_.relation(i, j);
    for (const auto &[rw, sc] : rel.terms())
      for (int k = 1; k <= budget; ++k) {
        if (sgn(sc[k]) == 0)
          continue;
        Word nw(w.begin(), w.begin() + p);
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + p + 2, w.end());
        res -= normal_form(nw, budget - k).scaled(Scalar::hbar_power(k, M, sc[k]));
      }
    res = res.truncated(budget);
  }
  return memo_.emplace(std::move(key), std::move(res)).first->second;
}

Element Rewriter::normal_form(const Element &e, int budget) {
  const int M = r_.order;
  Element out(r_.ctx, M);
  for (const auto &[w, c] : e.terms())
    for (int k = 0; k <= std::min(budget, c.order()); ++k) {
      if (sgn(c[k]) == 0)
        continue;
      out += normal_form(w, budget - k).scaled(Scalar::hbar_power(k, M, c[k]));
    }
  return out.truncated(budget);
}

Element Rewriter::normal_form(const Element &e) { return normal_form(e, r_.order); }

Element normal_form(const Word &w, const RelationSet &r) {
  Rewriter rw(r);
  return rw.normal_form(w, r.order);
}

Element normal_form(const Element &e, const RelationSet &r) {
  Rewriter rw(r);
  return rw.normal_form(e);
}

int symmetric_power_dimension(int n, int d) {
  if (d < 0)
    return 0;
  if (n == 0)
    return d == 0 ? 1 : 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
               static_cast<unsigned long>(n - 1));
  return static_cast<int>(b.get_si());
}

std::vector<OverlapDefect> overlap_defects(Rewriter &rw, int M) {
  const RelationSet &r = rw.relations();
  std::vector<OverlapDefect> out;
  for (int k = 0; k < r.n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        const auto xi = Element::letter(r.ctx, i, r.order);
        const auto xj = Element::letter(r.ctx, j, r.order);
        const auto xk = Element::letter(r.ctx, k, r.order);
        Element b1 = xj * xk * xi - r.relation(j, k) * xi;
        Element b2 = xk * xi * xj - xk * r.relation(i, j);
        OverlapDefect d{k, j, i, rw.normal_form(b1, M) - rw.normal_form(b2, M), -1};
        d.first_order = d.defect.valuation();
        out.push_back(std::move(d));
      }
  return out;
}

} // namespace pbw
