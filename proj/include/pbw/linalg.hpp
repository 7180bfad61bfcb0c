#pragma once

// Exact sparse linear algebra over Q.

#include "pbw/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pbw {

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec &y, const Rational &a, const SparseVec &x); // y += a*x

// Incremental row echelon form. Rows are normalized to leading coefficient 1
// and every stored row remembers which combination of inserted vectors it is.
class RowEchelon {
public:
  // Returns true when v was independent of what is already stored.
  bool insert(const SparseVec &v);
  bool contains(const SparseVec &v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }

  // Reduce v; returns the residual and fills `combo` with coefficients c_i
  // such that v - residual = sum c_i * (i-th inserted vector).
  SparseVec reduce(const SparseVec &v, SparseVec *combo = nullptr) const;

  // When v lies in the span: coefficients over inserted vectors.
  std::optional<SparseVec> express(const SparseVec &v) const;

  // Kernel vectors found while inserting: for each dependent insertion, the
  // relation among inserted vectors.
  const std::vector<SparseVec> &relations() const { return relations_; }

private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  std::map<int, Row> rows_; // leading column -> row
  std::vector<SparseVec> relations_;
  int inserted_ = 0;
};

int rank_of(const std::vector<SparseVec> &vectors);

// Basis of {c : sum c_j images[j] = 0}.
std::vector<SparseVec> kernel_of(const std::vector<SparseVec> &images);

// Size cap for finite slices, from PBW_MAX_BASIS (default 200000).
std::size_t max_slice_size();
void check_slice_size(std::size_t n, const char *what);

} // namespace pbw
