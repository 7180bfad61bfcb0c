#pragma once

// Polynomials in commuting and anticommuting variables with exact rational
// coefficients.

#include "pbw/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace pbw {

// Exponent vector; odd variables have exponent 0 or 1. A monomial stands for
// the product of its variables in increasing index order.
using Monomial = std::vector<int>;

class SuperPoly {
public:
  explicit SuperPoly(std::vector<bool> odd = {});

  static SuperPoly constant(std::vector<bool> odd, const Rational &c);
  static SuperPoly variable(std::vector<bool> odd, int v);

  int variables() const { return static_cast<int>(odd_.size()); }
  const std::vector<bool> &parities() const { return odd_; }
  const std::map<Monomial, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial &m, const Rational &c);

  SuperPoly &operator+=(const SuperPoly &o);
  SuperPoly &operator-=(const SuperPoly &o);
  SuperPoly &operator*=(const Rational &r);
  SuperPoly operator-() const;
  friend SuperPoly operator+(SuperPoly a, const SuperPoly &b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly &b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const Rational &r) { return a *= r; }
  friend SuperPoly operator*(const SuperPoly &a, const SuperPoly &b);
  friend bool operator==(const SuperPoly &a, const SuperPoly &b);

  // Derivative acting from the left (d/dv F) or from the right (F d/dv).
  SuperPoly left_derivative(int v) const;
  SuperPoly right_derivative(int v) const;

  // Total exponent in the variables [first, last).
  static int degree_in(const Monomial &m, int first, int last);

  std::string str(const std::vector<std::string> &names) const;

private:
  void check_compatible(const SuperPoly &o) const;

  std::vector<bool> odd_;
  std::map<Monomial, Rational> terms_;
};

// Sign and product of two monomials; sign 0 when an odd variable repeats.
int monomial_product(const std::vector<bool> &odd, const Monomial &a, const Monomial &b,
                     Monomial &out);

// Commutative polynomial ring in n even variables.
std::vector<bool> even_variables(int n);

} // namespace pbw
