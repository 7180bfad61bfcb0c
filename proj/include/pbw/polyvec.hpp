#pragma once

// Polyvector fields on V (functions of x) and on V[1] (functions of odd xi),
// written as superfunctions of coordinates q_1..q_n and momenta p_1..p_n.
//   dual:    q = x (even), p = theta = d/dx (odd)
//   shifted: q = xi (odd), p = eta = d/dxi (even)

#include "pbw/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbw {

enum class PolyvectorSpace { dual, shifted };

class Polyvector {
public:
  Polyvector() : Polyvector(PolyvectorSpace::dual, 0) {}
  Polyvector(PolyvectorSpace space, int n);
  Polyvector(PolyvectorSpace space, int n, SuperPoly f);

  // c * q_{coords[0]} q_{coords[1]} ... * p_{dirs[0]} p_{dirs[1]} ... (0-based,
  // products taken in the given order).
  static Polyvector term(PolyvectorSpace space, int n, const Rational &c,
                         const std::vector<int> &coords, const std::vector<int> &dirs);

  static std::vector<bool> parities(PolyvectorSpace space, int n);

  PolyvectorSpace space() const { return space_; }
  int dim() const { return n_; }
  const SuperPoly &superfunction() const { return f_; }
  bool is_zero() const { return f_.is_zero(); }

  Polyvector &operator+=(const Polyvector &o);
  Polyvector &operator-=(const Polyvector &o);
  friend Polyvector operator+(Polyvector a, const Polyvector &b) { return a += b; }
  friend Polyvector operator-(Polyvector a, const Polyvector &b) { return a -= b; }
  friend Polyvector operator*(Polyvector a, const Rational &r);
  friend bool operator==(const Polyvector &a, const Polyvector &b) {
    return a.space_ == b.space_ && a.n_ == b.n_ && a.f_ == b.f_;
  }

  // Number of directions when all terms agree, nullopt otherwise (or zero).
  std::optional<int> arity() const;
  // Shifted space only: (xi-degree - 1) when all terms agree.
  std::optional<int> total_degree() const;

  struct Term {
    Rational coefficient;
    std::vector<int> coords;     // q exponents as a multiset, increasing
    std::vector<int> directions; // strictly increasing for odd p
  };
  std::vector<Term> terms() const;

  std::vector<std::string> names() const;
  std::string str() const;

private:
  void check_compatible(const Polyvector &o) const;

  PolyvectorSpace space_;
  int n_;
  SuperPoly f_;
};

// [F,G] = sum_i (F <-d/dp_i)(d/dq_i-> G) - (F <-d/dq_i)(d/dp_i-> G).
// On vector fields this is the commutator.
Polyvector schouten_bracket(const Polyvector &a, const Polyvector &b);

// alpha = sum_{i<j} alpha_ij d_i ^ d_j with polynomial coefficients (0-based).
struct PoissonBivector {
  int n = 0;
  std::map<std::pair<int, int>, SuperPoly> entries; // i < j

  explicit PoissonBivector(int dim = 0) : n(dim) {}
  // alpha_ij with alpha_ji = -alpha_ij.
  SuperPoly entry(int i, int j) const;
  void set(int i, int j, const SuperPoly &p);
  Polyvector polyvector() const;
};

// {f,g} = sum_{i,j} alpha_ij d_i f d_j g for f, g polynomials in x.
SuperPoly poisson_bracket(const PoissonBivector &a, const SuperPoly &f, const SuperPoly &g);
// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}.
SuperPoly jacobiator(const PoissonBivector &a, int i, int j, int k);
// sum_{i<j<k} J(i,j,k) d_i ^ d_j ^ d_k.
Polyvector jacobiator_trivector(const PoissonBivector &a);

struct PoissonCheck {
  bool poisson = false;
  Polyvector bracket;   // [alpha, alpha]
  Polyvector witness;   // Jacobiator trivector; equals [alpha, alpha] / 2
};
PoissonCheck is_poisson(const PoissonBivector &a);

// x_i -> eta_i, theta_i -> xi_i. Brackets are intertwined up to a global
// sign: [K a, K b] = -K [a, b].
Polyvector koszul_dual(const Polyvector &a);
constexpr int koszul_bracket_sign = -1;
// Signs of K above arity 2 depend on a convention; callers flag such inputs.
bool koszul_convention_dependent(const Polyvector &a);

struct MaurerCartanCheck {
  bool ok = false;
  Polyvector bracket; // [gamma, gamma]
};
// gamma on V[1] of total degree 1; throws GradingError otherwise.
MaurerCartanCheck maurer_cartan_check(const Polyvector &gamma);

} // namespace pbw
