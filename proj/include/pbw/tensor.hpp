#pragma once

// Free graded tensor algebras over an interned generator context, with
// h-truncated exact coefficients.

#include "pbw/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbw {

struct Generator {
  std::string symbol;
  int degree = 0;
  // Structural label: a sorted index set for exterior letters, a sorted
  // multiset for symmetric letters, {i} for a plain coordinate.
  std::vector<int> key;
};

// Immutable set of generators. Elements refer to letters by index.
class Context {
public:
  explicit Context(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator &operator[](int id) const { return gens_.at(id); }
  std::optional<int> find(const std::string &symbol) const;
  std::optional<int> find_key(const std::vector<int> &key) const;
  int id_of_key(const std::vector<int> &key) const;

  // Coordinates x_1..x_n, all of degree 0, keys {i}.
  static std::shared_ptr<const Context> coordinates(int n, const std::string &prefix = "x");

private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> by_symbol_;
  std::map<std::vector<int>, int> by_key_;
};

using ContextPtr = std::shared_ptr<const Context>;
using Word = std::vector<int>;

int word_degree(const Context &ctx, const Word &w);

// Finite linear combination of words. Zero coefficients are never stored and
// terms are kept in lexicographic word order, so equality is syntactic.
class Element {
public:
  Element(ContextPtr ctx, int order);

  static Element unit(ContextPtr ctx, int order);
  static Element letter(ContextPtr ctx, int id, int order);
  static Element monomial(ContextPtr ctx, Word w, const Scalar &c);

  const ContextPtr &context() const { return ctx_; }
  int order() const { return order_; }
  const std::map<Word, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word &w) const;

  void add(const Word &w, const Scalar &c);
  void add(const Word &w, const Rational &c);

  Element &operator+=(const Element &o);
  Element &operator-=(const Element &o);
  Element operator-() const;
  Element scaled(const Scalar &s) const;
  Element scaled(const Rational &r) const;

  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator*(const Element &a, const Element &b);
  friend bool operator==(const Element &a, const Element &b);

  // Smallest h-power occurring, -1 for zero.
  int valuation() const;
  // The h^k layer, as an element with constant coefficients.
  Element hbar_layer(int k) const;
  Element truncated(int m) const;

  std::string str() const;

private:
  void check_compatible(const Element &o) const;

  ContextPtr ctx_;
  int order_;
  std::map<Word, Scalar> terms_;
};

std::string word_str(const Context &ctx, const Word &w);

// Sign of reordering a list of graded items. perm[p] is the original position
// of the item that lands at position p; the sign is the product of
// (-1)^{deg a * deg b} over inverted pairs.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

// Commutative polynomial: sorted letter multiset -> coefficient.
using CommPoly = std::map<Word, Scalar>;

// Full symmetrization with the 1/k! normalization. The monomial is a multiset
// of degree-0 letters (any order).
Element sym(const ContextPtr &ctx, Word monomial, int order);
Element sym(const ContextPtr &ctx, const CommPoly &p, int order);

// T(V) -> S(V). Throws GradingError on letters of nonzero degree.
CommPoly abelianize(const Element &e);

} // namespace pbw
