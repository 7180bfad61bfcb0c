#include "pbw/scalar.hpp"

#include "pbw/errors.hpp"

#include <ostream>
#include <sstream>

namespace pbw {

std::string to_string(const Rational &q) { return q.get_str(); }

Scalar::Scalar(int order) {
  if (order < 0)
    throw std::invalid_argument("Scalar: negative truncation order");
  c_.assign(order + 1, Rational(0));
}

Scalar::Scalar(const Rational &c, int order) : Scalar(order) { c_[0] = c; }

Scalar Scalar::hbar_power(int k, int order, const Rational &c) {
  Scalar s(order);
  if (k <= order)
    s.c_[k] = c;
  return s;
}

Rational Scalar::coefficient(int k) const {
  if (k < 0 || k > order())
    return 0;
  return c_[k];
}

void Scalar::set(int k, const Rational &v) {
  if (k >= 0 && k <= order())
    c_[k] = v;
}

bool Scalar::is_zero() const {
  for (const auto &c : c_)
    if (sgn(c) != 0)
      return false;
  return true;
}

int Scalar::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (sgn(c_[k]) != 0)
      return k;
  return -1;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (o.order() != order())
    throw ContextError("Scalar: truncation order mismatch");
  for (int k = 0; k <= order(); ++k)
    c_[k] += o.c_[k];
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  if (o.order() != order())
    throw ContextError("Scalar: truncation order mismatch");
  for (int k = 0; k <= order(); ++k)
    c_[k] -= o.c_[k];
  return *this;
}

Scalar &Scalar::operator*=(const Rational &r) {
  for (auto &c : c_)
    c *= r;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  for (auto &c : s.c_)
    c = -c;
  return s;
}

Scalar operator*(const Scalar &a, const Scalar &b) {
  if (a.order() != b.order())
    throw ContextError("Scalar: truncation order mismatch");
  const int m = a.order();
  Scalar r(m);
  for (int i = 0; i <= m; ++i) {
    if (sgn(a.c_[i]) == 0)
      continue;
    for (int j = 0; i + j <= m; ++j)
      if (sgn(b.c_[j]) != 0)
        r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.order() != b.order())
    return false;
  for (int k = 0; k <= a.order(); ++k)
    if (a.c_[k] != b.c_[k])
      return false;
  return true;
}

Scalar Scalar::shifted(int k) const {
  Scalar s(order());
  for (int i = 0; i + k <= order(); ++i)
    if (i + k >= 0)
      s.c_[i + k] = c_[i];
  return s;
}

Scalar Scalar::truncated(int m) const {
  Scalar s(*this);
  for (int i = m + 1; i <= order(); ++i)
    s.c_[i] = 0;
  return s;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (sgn(c_[k]) == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k == 1)
      os << "*h";
    else if (k > 1)
      os << "*h^" << k;
  }
  if (first)
    os << "0";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

} // namespace pbw
