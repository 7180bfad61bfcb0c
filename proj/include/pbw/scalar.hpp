#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw {

using Rational = mpq_class;

std::string to_string(const Rational &q);

// Truncated power series c_0 + c_1 h + ... + c_M h^M with exact rational
// coefficients. Arithmetic is performed modulo h^{M+1}.
class Scalar {
public:
  explicit Scalar(int order = 0);
  Scalar(const Rational &c, int order);

  static Scalar hbar_power(int k, int order, const Rational &c = 1);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational &operator[](int k) const { return c_[k]; }
  Rational coefficient(int k) const;
  void set(int k, const Rational &v);

  bool is_zero() const;
  // Smallest k with c_k != 0, or -1 for the zero series.
  int valuation() const;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Rational &r);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator*(Scalar a, const Rational &r) { return a *= r; }
  friend bool operator==(const Scalar &a, const Scalar &b);

  // Multiply by h^k.
  Scalar shifted(int k) const;
  // Drop everything of order > m.
  Scalar truncated(int m) const;

  std::string str() const;

private:
  std::vector<Rational> c_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace pbw
