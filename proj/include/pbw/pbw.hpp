#pragma once

// Relation sets x_i x_j - x_j x_i = R_ij, h-adic rewriting to sorted words,
// overlap and dimension checks of the PBW property, obstructions and
// corrections, and the deformed cobar complex of a Lie algebra.

#include "pbw/complexes.hpp"
#include "pbw/polyvec.hpp"
#include "pbw/tensor.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace pbw {

// Structure constants [x_i, x_j] = sum_k c_ij^k x_k (0-based), stored for
// i < j. Jacobi is not assumed.
struct LieAlgebra {
  int n = 0;
  std::map<std::pair<int, int>, std::map<int, Rational>> constants;

  explicit LieAlgebra(int dim = 0) : n(dim) {}
  void set(int i, int j, int k, const Rational &c); // also fills (j,i) by antisymmetry
  std::map<int, Rational> bracket(int i, int j) const;

  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]].
  std::map<int, Rational> jacobiator(int i, int j, int k) const;
  struct JacobiCheck {
    bool ok = true;
    std::optional<std::array<int, 3>> witness;
    std::map<int, Rational> value;
  };
  JacobiCheck check_jacobi() const;

  PoissonBivector poisson() const; // alpha_ij = sum_k c_ij^k x_k

  static LieAlgebra sl2();        // basis e, f, h
  static LieAlgebra heisenberg(); // basis x, y, z with [x,y] = z
  static LieAlgebra so3();
  // [x1,x2] = x1, [x2,x3] = x2, [x3,x1] = x3; Jacobi fails.
  static LieAlgebra non_jacobi_example();
  static LieAlgebra random(int n, unsigned seed, int range = 2);
};

struct RelationSet {
  int n = 0;
  int order = 0; // coefficients are kept mod h^{order+1}
  ContextPtr ctx;
  std::map<std::pair<int, int>, Element> rhs; // i < j; each R_ij in h T(V)

  RelationSet(int dim = 0, int hbar_order = 0);
  Element relation(int i, int j) const; // zero when absent
  void set(int i, int j, const Element &r);
  Element order1(int i, int j) const { return relation(i, j).hbar_layer(1); }
  // Same relations read mod h^{m+1}.
  RelationSet with_order(int m) const;
};

RelationSet relations_from_lie(const LieAlgebra &g, int hbar_order);
// R_ij = h sym(alpha_ij) with the 1/k! normalization.
RelationSet relations_order1(const PoissonBivector &a, int hbar_order);

// h-adic normal forms with memoized rewriting x_j x_i -> x_i x_j - R_ij (j > i).
class Rewriter {
public:
  explicit Rewriter(const RelationSet &r);
  const RelationSet &relations() const { return r_; }
  // Normal form of w, correct mod h^{budget+1}.
  const Element &normal_form(const Word &w, int budget);
  Element normal_form(const Element &e);
  Element normal_form(const Element &e, int budget);

private:
  RelationSet r_;
  std::map<std::pair<Word, int>, Element> memo_;
};

Element normal_form(const Word &w, const RelationSet &r);
Element normal_form(const Element &e, const RelationSet &r);

struct OverlapDefect {
  int k = 0, j = 0, i = 0; // k > j > i
  Element defect;          // NF(branch through x_j x_k x_i) - NF(branch through x_k x_i x_j)
  int first_order = -1;    // lowest h-power present
};

struct GradedDimension {
  int degree = 0;
  int hbar = 0;
  int dimension = 0;
  int expected = 0;
};

struct PBWReport {
  int n = 0;
  int N = 0;
  int M = 0;
  std::optional<int> hbar_weight; // deg h used for the homogeneous slices
  bool approximate = false;       // set when no homogeneous grading exists
  std::vector<OverlapDefect> defects;
  std::vector<GradedDimension> graded;
  std::vector<int> dims;     // per degree d: min over h-layers
  std::vector<int> expected; // C(d+n-1, n-1)
  bool pass = false;
  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

std::vector<OverlapDefect> overlap_defects(Rewriter &rw, int M);
PBWReport pbw_check(const RelationSet &r, int N, int M);

// h^m layer of each overlap defect; PreconditionError when a lower order fails.
std::map<std::array<int, 3>, Element> obstruction(const RelationSet &r, int m, int N = 3);

struct CorrectionResult {
  bool feasible = false;
  RelationSet relations;                      // updated (only the h^m layer changes)
  std::map<std::pair<int, int>, Element> omega; // h^m layer added, constant coefficients
  std::map<std::array<int, 3>, Element> residual; // on failure: obstruction left over
  int unknowns = 0;
  int degree_bound = 0;
  std::string message;
};
// Degree bound D < 0 picks max deg(R) + m - 1 from the order-1 layer.
CorrectionResult solve_corrections(const RelationSet &r, int m, int degree_bound = -1);

// CoBar(Lambda^-(g)) in the koszul frame with d_1 = h * (Chevalley-Eilenberg
// chain differential) on the letters xi_I, |I| >= 2.
struct DeformedCobar {
  CobarComplex complex;
  bool square_zero = true;
  std::optional<Word> witness;
};
DeformedCobar deformed_cobar(const LieAlgebra &g, int hbar_order, int check_weight = 3);

// Relations read off d(xi_ij) = x_i x_j - x_j x_i - R_ij, then pbw_check.
struct H0Presentation {
  RelationSet relations;
  PBWReport report;
};
H0Presentation h0_presentation(const DeformedCobar &c, int N, int M);

int symmetric_power_dimension(int n, int d);

} // namespace pbw
