#include "pbw/polyvec.hpp"

#include "pbw/errors.hpp"

#include <sstream>

namespace pbw {

std::vector<bool> Polyvector::parities(PolyvectorSpace space, int n) {
  std::vector<bool> odd(2 * n, false);
  for (int i = 0; i < n; ++i) {
    if (space == PolyvectorSpace::dual)
      odd[n + i] = true;
    else
      odd[i] = true;
  }
  return odd;
}

Polyvector::Polyvector(PolyvectorSpace space, int n)
    : space_(space), n_(n), f_(parities(space, n)) {}

Polyvector::Polyvector(PolyvectorSpace space, int n, SuperPoly f)
    : space_(space), n_(n), f_(std::move(f)) {
  if (f_.parities() != parities(space, n))
    throw ContextError("Polyvector: superfunction over the wrong variables");
}

Polyvector Polyvector::term(PolyvectorSpace space, int n, const Rational &c,
                            const std::vector<int> &coords, const std::vector<int> &dirs) {
  const auto odd = parities(space, n);
  SuperPoly f = SuperPoly::constant(odd, c);
  for (int q : coords) {
    if (q < 0 || q >= n)
      throw std::out_of_range("Polyvector::term: coordinate index");
    f = f * SuperPoly::variable(odd, q);
  }
  for (int p : dirs) {
    if (p < 0 || p >= n)
      throw std::out_of_range("Polyvector::term: direction index");
    f = f * SuperPoly::variable(odd, n + p);
  }
  return Polyvector(space, n, std::move(f));
}

void Polyvector::check_compatible(const Polyvector &o) const {
  if (space_ != o.space_ || n_ != o.n_)
    throw ContextError("Polyvector: operands live on different spaces");
}

Polyvector &Polyvector::operator+=(const Polyvector &o) {
  check_compatible(o);
  f_ += o.f_;
  return *this;
}

Polyvector &Polyvector::operator-=(const Polyvector &o) {
  check_compatible(o);
  f_ -= o.f_;
  return *this;
}

Polyvector operator*(Polyvector a, const Rational &r) {
  a.f_ *= r;
  return a;
}

std::optional<int> Polyvector::arity() const {
  std::optional<int> k;
  for (const auto &[m, c] : f_.terms()) {
    int d = SuperPoly::degree_in(m, n_, 2 * n_);
    if (k && *k != d)
      return std::nullopt;
    k = d;
  }
  return k;
}

std::optional<int> Polyvector::total_degree() const {
  if (space_ != PolyvectorSpace::shifted)
    throw GradingError("total_degree: only defined on V[1]");
  std::optional<int> t;
  for (const auto &[m, c] : f_.terms()) {
    int d = SuperPoly::degree_in(m, 0, n_) - 1;
    if (t && *t != d)
      return std::nullopt;
    t = d;
  }
  return t;
}

std::vector<Polyvector::Term> Polyvector::terms() const {
  std::vector<Term> out;
  for (const auto &[m, c] : f_.terms()) {
    Term t{c, {}, {}};
    for (int v = 0; v < n_; ++v)
      for (int e = 0; e < m[v]; ++e)
        t.coords.push_back(v);
    for (int v = 0; v < n_; ++v)
      for (int e = 0; e < m[n_ + v]; ++e)
        t.directions.push_back(v);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> Polyvector::names() const {
  std::vector<std::string> names;
  const bool dual = space_ == PolyvectorSpace::dual;
  for (int i = 0; i < n_; ++i)
    names.push_back((dual ? "x" : "xi") + std::to_string(i + 1));
  for (int i = 0; i < n_; ++i)
    names.push_back((dual ? "d" : "dxi") + std::to_string(i + 1));
  return names;
}

std::string Polyvector::str() const { return f_.str(names()); }

Polyvector schouten_bracket(const Polyvector &a, const Polyvector &b) {
  if (a.space() != b.space() || a.dim() != b.dim())
    throw ContextError("schouten_bracket: operands live on different spaces");
  const int n = a.dim();
  const auto &F = a.superfunction();
  const auto &G = b.superfunction();
  SuperPoly r(F.parities());
  for (int i = 0; i < n; ++i) {
    r += F.right_derivative(n + i) * G.left_derivative(i);
    r -= F.right_derivative(i) * G.left_derivative(n + i);
  }
  return Polyvector(a.space(), n, std::move(r));
}

SuperPoly PoissonBivector::entry(int i, int j) const {
  if (i == j)
    return SuperPoly(even_variables(n));
  auto it = entries.find({std::min(i, j), std::max(i, j)});
  if (it == entries.end())
    return SuperPoly(even_variables(n));
  return i < j ? it->second : -it->second;
}

void PoissonBivector::set(int i, int j, const SuperPoly &p) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("PoissonBivector::set: bad index pair");
  if (p.parities() != even_variables(n))
    throw ContextError("PoissonBivector::set: coefficient over the wrong variables");
  if (i < j)
    entries[{i, j}] = p;
  else
    entries[{j, i}] = -p;
}

namespace {

// Embed a polynomial in x into the dual-space superfunction ring.
SuperPoly embed_coords(const SuperPoly &p, int n) {
  SuperPoly r(Polyvector::parities(PolyvectorSpace::dual, n));
  for (const auto &[m, c] : p.terms()) {
    Monomial e(2 * n, 0);
    for (int v = 0; v < n; ++v)
      e[v] = m[v];
    r.add(e, c);
  }
  return r;
}

} // namespace

Polyvector PoissonBivector::polyvector() const {
  Polyvector out(PolyvectorSpace::dual, n);
  for (const auto &[ij, p] : entries) {
    SuperPoly f = embed_coords(p, n) *
                  Polyvector::term(PolyvectorSpace::dual, n, 1, {}, {ij.first, ij.second})
                      .superfunction();
    out += Polyvector(PolyvectorSpace::dual, n, std::move(f));
  }
  return out;
}

SuperPoly poisson_bracket(const PoissonBivector &a, const SuperPoly &f, const SuperPoly &g) {
  SuperPoly r(even_variables(a.n));
  for (int i = 0; i < a.n; ++i) {
    SuperPoly fi = f.left_derivative(i);
    if (fi.is_zero())
      continue;
    for (int j = 0; j < a.n; ++j)
      r += a.entry(i, j) * fi * g.left_derivative(j);
  }
  return r;
}

SuperPoly jacobiator(const PoissonBivector &a, int i, int j, int k) {
  const auto ev = even_variables(a.n);
  auto x = [&](int v) { return SuperPoly::variable(ev, v); };
  auto br = [&](const SuperPoly &f, const SuperPoly &g) { return poisson_bracket(a, f, g); };
  return br(x(i), br(x(j), x(k))) + br(x(j), br(x(k), x(i))) + br(x(k), br(x(i), x(j)));
}

Polyvector jacobiator_trivector(const PoissonBivector &a) {
  Polyvector out(PolyvectorSpace::dual, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      for (int k = j + 1; k < a.n; ++k) {
        SuperPoly f = embed_coords(jacobiator(a, i, j, k), a.n) *
                      Polyvector::term(PolyvectorSpace::dual, a.n, 1, {}, {i, j, k})
                          .superfunction();
        out += Polyvector(PolyvectorSpace::dual, a.n, std::move(f));
      }
  return out;
}

PoissonCheck is_poisson(const PoissonBivector &a) {
  PoissonCheck c;
  const Polyvector alpha = a.polyvector();
  c.bracket = schouten_bracket(alpha, alpha);
  c.witness = jacobiator_trivector(a);
  c.poisson = c.bracket.is_zero();
  return c;
}

Polyvector koszul_dual(const Polyvector &a) {
  if (a.space() != PolyvectorSpace::dual)
    throw ContextError("koszul_dual: expects a polyvector on V");
  const int n = a.dim();
  Polyvector out(PolyvectorSpace::shifted, n);
  for (const auto &t : a.terms()) {
    // theta_I x^a  ->  xi_I eta^a; the theta's come first in the image so the
    // odd part keeps its order.
    out += Polyvector::term(PolyvectorSpace::shifted, n, t.coefficient, t.directions,
                            t.coords);
  }
  return out;
}

bool koszul_convention_dependent(const Polyvector &a) {
  for (const auto &t : a.terms())
    if (t.directions.size() >= 3)
      return true;
  return false;
}

MaurerCartanCheck maurer_cartan_check(const Polyvector &gamma) {
  if (gamma.space() != PolyvectorSpace::shifted)
    throw GradingError("maurer_cartan_check: expects a polyvector on V[1]");
  if (!gamma.is_zero()) {
    auto t = gamma.total_degree();
    if (!t || *t != 1)
      throw GradingError("maurer_cartan_check: total degree must be 1");
  }
  MaurerCartanCheck r;
  r.bracket = schouten_bracket(gamma, gamma);
  r.ok = r.bracket.is_zero();
  return r;
}

} // namespace pbw
