#include "pbw/poly.hpp"

#include "pbw/errors.hpp"

#include <sstream>

namespace pbw {

SuperPoly::SuperPoly(std::vector<bool> odd) : odd_(std::move(odd)) {}

SuperPoly SuperPoly::constant(std::vector<bool> odd, const Rational &c) {
  SuperPoly p(std::move(odd));
  p.add(Monomial(p.variables(), 0), c);
  return p;
}

SuperPoly SuperPoly::variable(std::vector<bool> odd, int v) {
  SuperPoly p(std::move(odd));
  Monomial m(p.variables(), 0);
  m.at(v) = 1;
  p.add(m, 1);
  return p;
}

void SuperPoly::add(const Monomial &m, const Rational &c) {
  if (m.size() != odd_.size())
    throw ContextError("SuperPoly: monomial of the wrong length");
  if (sgn(c) == 0)
    return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void SuperPoly::check_compatible(const SuperPoly &o) const {
  if (odd_ != o.odd_)
    throw ContextError("SuperPoly: operands over different variables");
}

SuperPoly &SuperPoly::operator+=(const SuperPoly &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_)
    add(m, c);
  return *this;
}

SuperPoly &SuperPoly::operator-=(const SuperPoly &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_)
    add(m, -c);
  return *this;
}

SuperPoly &SuperPoly::operator*=(const Rational &r) {
  if (sgn(r) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= r;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly p = *this;
  return p *= Rational(-1);
}

int monomial_product(const std::vector<bool> &odd, const Monomial &a, const Monomial &b,
                     Monomial &out) {
  const int n = static_cast<int>(odd.size());
  out.assign(n, 0);
  int sign = 1;
  int odd_in_a_after = 0; // odd variables of a with index > current v
  for (int v = 0; v < n; ++v)
    if (odd[v] && a[v])
      ++odd_in_a_after;
  for (int v = 0; v < n; ++v) {
    if (odd[v] && a[v])
      --odd_in_a_after;
    if (odd[v] && a[v] && b[v])
      return 0;
    if (odd[v] && b[v] && (odd_in_a_after & 1))
      sign = -sign;
    out[v] = a[v] + b[v];
  }
  return sign;
}

SuperPoly operator*(const SuperPoly &a, const SuperPoly &b) {
  a.check_compatible(b);
  SuperPoly r(a.odd_);
  Monomial m;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      int s = monomial_product(a.odd_, ma, mb, m);
      if (s != 0)
        r.add(m, Rational(s * ca * cb));
    }
  return r;
}

bool operator==(const SuperPoly &a, const SuperPoly &b) {
  return a.odd_ == b.odd_ && a.terms_ == b.terms_;
}

namespace {

SuperPoly derivative(const SuperPoly &p, int v, bool from_left) {
  SuperPoly r(p.parities());
  const auto &odd = p.parities();
  for (const auto &[m, c] : p.terms()) {
    if (m[v] == 0)
      continue;
    Monomial nm = m;
    nm[v] -= 1;
    Rational coef = c * m[v];
    if (odd[v]) {
      int passed = 0;
      for (int u = 0; u < p.variables(); ++u)
        if (odd[u] && m[u] && (from_left ? u < v : u > v))
          ++passed;
      if (passed & 1)
        coef = -coef;
    }
    r.add(nm, coef);
  }
  return r;
}

} // namespace

SuperPoly SuperPoly::left_derivative(int v) const { return derivative(*this, v, true); }
SuperPoly SuperPoly::right_derivative(int v) const { return derivative(*this, v, false); }

int SuperPoly::degree_in(const Monomial &m, int first, int last) {
  int s = 0;
  for (int v = first; v < last; ++v)
    s += m[v];
  return s;
}

std::string SuperPoly::str(const std::vector<std::string> &names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    for (int v = 0; v < variables(); ++v)
      for (int e = 0; e < m[v]; ++e)
        os << "*" << names.at(v);
  }
  return os.str();
}

std::vector<bool> even_variables(int n) { return std::vector<bool>(n, false); }

} // namespace pbw
