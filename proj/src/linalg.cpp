#include "pbw/linalg.hpp"

#include "pbw/errors.hpp"

#include <cstdlib>
#include <string>

namespace pbw {

void axpy(SparseVec &y, const Rational &a, const SparseVec &x) {
  if (sgn(a) == 0)
    return;
  for (const auto &[i, xi] : x) {
    auto [it, inserted] = y.try_emplace(i, a * xi);
    if (!inserted) {
      it->second += a * xi;
      if (sgn(it->second) == 0)
        y.erase(it);
    }
  }
}

SparseVec RowEchelon::reduce(const SparseVec &v, SparseVec *combo) const {
  SparseVec r = v;
  if (combo)
    combo->clear();
  auto it = r.begin();
  while (it != r.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational f = it->second;
    axpy(r, -f, row->second.v);
    if (combo)
      axpy(*combo, f, row->second.combo);
    it = r.upper_bound(col);
  }
  return r;
}

bool RowEchelon::insert(const SparseVec &v) {
  const int idx = inserted_++;
  SparseVec combo;
  SparseVec r = reduce(v, &combo);
  if (r.empty()) {
    // v = sum combo  =>  e_idx - combo is a relation.
    SparseVec rel;
    for (const auto &[i, c] : combo)
      rel[i] = -c;
    rel[idx] = 1;
    relations_.push_back(std::move(rel));
    return false;
  }
  // Row r = v - sum combo_i u_i.
  SparseVec rc;
  for (const auto &[i, c] : combo)
    rc[i] = -c;
  rc[idx] = 1;
  const Rational lead = r.begin()->second;
  const Rational inv = 1 / lead;
  for (auto &[i, c] : r)
    c *= inv;
  for (auto &[i, c] : rc)
    c *= inv;
  const int col = r.begin()->first;
  rows_.emplace(col, Row{std::move(r), std::move(rc)});
  return true;
}

bool RowEchelon::contains(const SparseVec &v) const { return reduce(v).empty(); }

std::optional<SparseVec> RowEchelon::express(const SparseVec &v) const {
  SparseVec combo;
  if (!reduce(v, &combo).empty())
    return std::nullopt;
  return combo;
}

int rank_of(const std::vector<SparseVec> &vectors) {
  RowEchelon e;
  for (const auto &v : vectors)
    e.insert(v);
  return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec> &images) {
  RowEchelon e;
  for (const auto &v : images)
    e.insert(v);
  return e.relations();
}

std::size_t max_slice_size() {
  if (const char *s = std::getenv("PBW_MAX_BASIS")) {
    try {
      long v = std::stol(s);
      if (v > 0)
        return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 200000;
}

void check_slice_size(std::size_t n, const char *what) {
  if (n > max_slice_size())
    throw ResourceError(std::string(what) + ": slice of size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(max_slice_size()) +
                        " (set PBW_MAX_BASIS to raise it)");
}

} // namespace pbw
