#pragma once

// Hochschild cochains of finite-dimensional truncated algebras, the
// Gerstenhaber circle product and bracket, HKR, and the map Phi_1 on the
// cobar complex of S(W).

#include "pbw/coalg.hpp"
#include "pbw/complexes.hpp"
#include "pbw/linalg.hpp"
#include "pbw/polyvec.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbw {

// Basis plus product table. A missing product means it left the degree bound.
class TruncatedAlgebra {
public:
  TruncatedAlgebra(std::vector<std::string> names, std::vector<std::optional<SparseVec>> table);

  // S(V)_{<= max_degree}: basis = sorted monomials of degree <= max_degree.
  static std::shared_ptr<const TruncatedAlgebra> polynomial(int n, int max_degree);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string &name(int i) const { return names_.at(i); }
  const std::optional<SparseVec> &product(int i, int j) const;
  // Bilinear extension; throws DegreeOverflow naming the basis pair.
  SparseVec multiply(const SparseVec &a, const SparseVec &b) const;

  // Copy with one structure constant replaced (negative controls).
  std::shared_ptr<const TruncatedAlgebra> with_product(int i, int j, SparseVec v) const;
  // Associativity on every basis triple whose products stay in range.
  bool is_associative() const;

  // Polynomial algebras only.
  int variables() const { return n_; }
  const BasisKey &monomial(int i) const { return keys_.at(i); }
  std::optional<int> index_of(const BasisKey &monomial) const;
  SparseVec derivative(int var, int i) const;

  std::string str(const SparseVec &v) const;

private:
  std::vector<std::string> names_;
  std::vector<std::optional<SparseVec>> table_; // row-major dim x dim
  int n_ = 0;
  std::vector<BasisKey> keys_;
};

using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

// Multilinear map A^{(x) arity} -> A, evaluated lazily on basis tuples and
// memoized. Hochschild degree is arity - 1.
class Cochain {
public:
  using Rule = std::function<SparseVec(std::span<const int>)>;
  Cochain(AlgebraPtr alg, int arity, Rule rule);

  const AlgebraPtr &algebra() const { return alg_; }
  int arity() const { return arity_; }
  int hochschild_degree() const { return arity_ - 1; }

  SparseVec operator()(std::span<const int> tuple) const;
  SparseVec eval(const std::vector<SparseVec> &args) const;

  // Random values on every basis tuple, coefficients in [-range, range].
  static Cochain random(AlgebraPtr alg, int arity, unsigned seed, int range = 3,
                        double density = 0.4);

private:
  struct Cache;
  AlgebraPtr alg_;
  int arity_;
  Rule rule_;
  std::shared_ptr<Cache> cache_;
};

// All basis tuples of the given length.
std::vector<std::vector<int>> basis_tuples(int dim, int length);

Cochain identity_cochain(const AlgebraPtr &alg);
Cochain product_cochain(const AlgebraPtr &alg);

Cochain hochschild_differential(const Cochain &psi);
Cochain gerstenhaber_circle(const Cochain &a, const Cochain &b);
Cochain gerstenhaber_bracket(const Cochain &a, const Cochain &b);
Cochain operator+(const Cochain &a, const Cochain &b);
Cochain operator-(const Cochain &a, const Cochain &b);
Cochain scaled(const Cochain &a, const Rational &r);

// d psi = (-1)^{arity - 1} [m, psi].
constexpr int bracket_differential_sign(int arity) { return (arity - 1) % 2 == 0 ? 1 : -1; }

// Difference of two cochains on all tuples whose evaluation stays in range;
// returns the first tuple where they differ.
std::optional<std::vector<int>> first_difference(const Cochain &a, const Cochain &b);
bool is_zero_on_range(const Cochain &a);

// (a_1..a_k) -> (1/k!) sum gamma^{i_1..i_k} d_{i_1} a_1 ... d_{i_k} a_k, so
// that full antisymmetrization returns gamma. alg must be polynomial in
// gamma.dim() variables.
Cochain hkr(const Polyvector &gamma, const AlgebraPtr &alg);
// sum over permutations s of sign(s) c(a_{s(1)}, ..., a_{s(k)}).
Cochain antisymmetrize(const Cochain &c);

// A map S(W) -> S(W)^{(x) k} on the basis of S(W)_{<= B}: the generator values
// of a derivation of CoBar(S(W)).
struct CobarCochain {
  int k = 1;
  std::map<BasisKey, CoTensor> values;
};

// The full and reduced cobar complexes of S(W), dim W = n, letters of weight <= B.
struct SymmetricCobarPair {
  CobarComplex full;
  CobarComplex reduced;
  SymmetricCobarPair(int n, int max_weight);
};

CobarCochain random_cobar_cochain(int n, int max_weight, int k, unsigned seed);

struct Phi1Result {
  Derivation derivation;              // on CoBar(S(W)^+)
  std::string coset = "modulo inner derivations";
};
Phi1Result phi1(const SymmetricCobarPair &c, const CobarCochain &psi);

struct Phi1Defect {
  Element unit_image;        // a = p^{(x)k}(Psi(1)), in CoBar(S(W)^+)
  int sign_left = 1;         // defect(s) = sign_left a s + sign_right s a
  int sign_right = 1;
  std::map<int, Element> defect; // reduced letter id -> (Phi delta - delta Phi)(s)
};
// Throws ConventionError when some generator's defect is not of that shape
// with one pair of signs.
Phi1Defect phi1_defect(const SymmetricCobarPair &c, const CobarCochain &psi);

} // namespace pbw
