#pragma once

// Bar and cobar complexes, derivations of free algebras, and exact cohomology
// of finite slices.

#include "pbw/coalg.hpp"
#include "pbw/linalg.hpp"
#include "pbw/tensor.hpp"

#include <optional>
#include <vector>

namespace pbw {

// Leibniz sign rule for derivations of a free algebra.
//  positional: passing a prefix u costs (-1)^{deg(D) * length(u)}
//  koszul:     passing a prefix u costs (-1)^{deg(D) * degree(u)}
enum class SignRule { positional, koszul };

// A derivation of T(L), determined by its values on generators.
struct Derivation {
  std::map<int, Element> values; // generator id -> value; absent means 0
  int degree = 0;
  SignRule rule = SignRule::koszul;

  Element apply(const Element &e) const;
  // Value on a single word with coefficient c.
  void apply_word(const Word &w, const Scalar &c, Element &out) const;
};

// Parity used by `rule` for a word.
int sign_parity(const Context &ctx, SignRule rule, const Word &w);

// Inner derivation ad(a)(x) = a x - (-1)^{|a||x|} x a, graded by `rule`.
Element inner_derivation(const Element &a, const Element &x, SignRule rule);

// [D1, D2](x) = D1 D2 x - (-1)^{|D1||D2|} D2 D1 x.
Element commutator(const Derivation &d1, const Derivation &d2, const Element &x);

// Cobar complex of a (co)free symmetric or exterior coalgebra, optionally with
// an h-linear deformation of its differential.
//
// Frames: `positional` is the alternating-slot formula
//   delta(q_1...q_k) = sum_t (-1)^{t-1} q_1 ... (Delta q_t) ... q_k
// with the plain shuffle sign; `koszul` makes the differential a derivation
// for the cohomological degree deg(xi_I) = 1 - |I|, which twists the exterior
// coproduct by (-1)^{|J|-1}. Both frames give isomorphic complexes; only the
// koszul frame admits weight-lowering deformations as derivations.
class CobarComplex {
public:
  CobarComplex(CoalgebraSpec spec, int max_letter_weight, SignRule frame, int hbar_order = 0);

  const CoalgebraSpec &spec() const { return spec_; }
  const ContextPtr &context() const { return ctx_; }
  SignRule frame() const { return frame_; }
  int hbar_order() const { return order_; }
  int max_letter_weight() const { return max_w_; }

  int letter(const BasisKey &k) const { return ctx_->id_of_key(k); }
  int letter_weight(int id) const { return static_cast<int>((*ctx_)[id].key.size()); }
  int word_weight(const Word &w) const;
  Element word(const Word &w, const Rational &c = 1) const;
  Element letter_element(const BasisKey &k) const;

  // Undeformed differential and its value on generators.
  const Derivation &d0() const { return d0_; }
  void set_deformation(Derivation d);
  const std::optional<Derivation> &deformation() const { return deformation_; }

  Element differential(const Element &e) const;
  Element undeformed(const Element &e) const { return d0_.apply(e); }

  // Words of the given cohomological degree and weight.
  std::vector<Word> basis(int degree, int weight) const;

private:
  CoalgebraSpec spec_;
  int max_w_;
  SignRule frame_;
  int order_;
  ContextPtr ctx_;
  Derivation d0_;
  std::optional<Derivation> deformation_;
};

// Cobar complex of Lambda^-(V) with all letters (weights 1..n).
CobarComplex exterior_cobar(int n, SignRule frame = SignRule::positional, int hbar_order = 0);

struct CohomologySlice {
  int degree = 0;
  int weight = 0;
  int cochains = 0;      // dim of the degree-d slice
  int rank_out = 0;      // rank of d leaving degree d
  int rank_in = 0;       // rank of d entering degree d
  int dimension = 0;     // cochains - rank_out - rank_in
  std::vector<Element> representatives;
};

// Undeformed cohomology of one (degree, weight) slice.
CohomologySlice truncated_cohomology(const CobarComplex &c, int degree, int weight,
                                     bool with_representatives = false);

// d^2 on every word of the slice; returns the first word with d^2 != 0.
std::optional<Word> square_zero_witness(const CobarComplex &c, int degree, int weight,
                                        bool deformed = true);

// Graded pieces F_i H^0 / F_{i+1} H^0 of the deformed complex against
// h^i H^0(d_0), and vanishing of negative-degree cohomology, per total weight
// (word weight + h-power, which the deformation preserves).
struct FiltrationRow {
  int total_weight = 0;
  int level = 0;
  int graded_dimension = 0;
  int expected = 0;
};
struct NegativeDegreeRow {
  int total_weight = 0;
  int degree = 0;
  int dimension = 0;
};
struct FiltrationReport {
  bool square_zero = true;
  std::optional<Word> witness;
  std::vector<FiltrationRow> graded;
  std::vector<NegativeDegreeRow> negative;
  bool hbar_truncated = false; // some slices were cut by h^{M+1}
  bool ok() const;
};

FiltrationReport filtration_graded_check(const CobarComplex &c, int i_max, int max_weight);

// Lift a d_0-cycle x to x + h x_1 + ... + h^k x_k with d_h(lift) = 0 mod h^{k+1}.
struct LiftResult {
  bool ok = false;
  Element lift;
  int failed_step = 0;         // step m+1 at which the system was inconsistent
  std::optional<Element> obstruction; // -(d_h x^{(m)})_{m+1}, not in the image of d_0
};
LiftResult lift_cycle(const CobarComplex &c, const Element &x, int k);

// Bar complex of the truncated polynomial algebra S(V)_{<= max_degree}.
class BarComplex {
public:
  BarComplex(int n, int max_degree, bool unital = true);

  const ContextPtr &context() const { return ctx_; }
  bool unital() const { return unital_; }
  int unit() const; // id of the letter 1

  int letter(const BasisKey &monomial) const { return ctx_->id_of_key(monomial); }
  Element word(const std::vector<BasisKey> &monomials, const Rational &c = 1) const;

  // d(a_1..a_k) = sum_i (-1)^{i-1} a_1 .. (a_i a_{i+1}) .. a_k; zero for k = 1.
  Element differential(const Element &e) const;
  // h(a_1..a_k) = 1 a_1 .. a_k.
  Element homotopy(const Element &e) const;

  // Words of tensor length `length` whose total polynomial degree is `degree`.
  std::vector<Word> basis(int length, int degree) const;

private:
  int multiply(int a, int b) const;

  int n_;
  int max_degree_;
  bool unital_;
  ContextPtr ctx_;
};

} // namespace pbw
