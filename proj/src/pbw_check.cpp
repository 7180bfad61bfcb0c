#include "pbw/errors.hpp"
#include "pbw/linalg.hpp"
#include "pbw/pbw.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pbw {

namespace {

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out;
  Word w(len, 0);
  if (len == 0)
    return {Word{}};
  if (n == 0)
    return {};
  while (true) {
    out.push_back(w);
    int p = len - 1;
    while (p >= 0 && ++w[p] == n)
      w[p--] = 0;
    if (p < 0)
      break;
  }
  return out;
}

std::vector<Word> sorted_words(int n, int len) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// deg h making every relation homogeneous of degree 2, if one exists.
std::optional<int> hbar_weight(const RelationSet &r) {
  std::optional<int> h;
  for (const auto &[ij, e] : r.rhs)
    for (const auto &[w, c] : e.terms())
      for (int k = 1; k <= c.order(); ++k) {
        if (sgn(c[k]) == 0)
          continue;
        const int num = 2 - static_cast<int>(w.size());
        if (num % k != 0)
          return std::nullopt;
        if (h && *h != num / k)
          return std::nullopt;
        h = num / k;
      }
  if (!h)
    h = 1;
  return h;
}

// Finite piece of S(V)[h]/h^{M+1} (sorted words at h-layers) together with
// the normal forms of the ideal generators landing in it.
struct Space {
  std::vector<std::pair<int, Word>> entries;
  std::map<std::pair<int, Word>, int> index;
  RowEchelon ideal;

  void add_entry(int k, Word w) {
    index.emplace(std::make_pair(k, w), static_cast<int>(entries.size()));
    entries.emplace_back(k, std::move(w));
  }

  SparseVec vec(const Element &e, std::size_t max_len, bool drop_long) const {
    SparseVec v;
    for (const auto &[w, c] : e.terms()) {
      if (w.size() > max_len && drop_long)
        continue;
      for (int k = 0; k <= c.order(); ++k) {
        if (sgn(c[k]) == 0)
          continue;
        auto it = index.find({k, w});
        if (it == index.end()) {
          if (drop_long)
            continue;
          throw std::logic_error("pbw_check: normal form left its homogeneous slice");
        }
        v[it->second] = c[k];
      }
    }
    return v;
  }
};

// u (x_j x_i - x_i x_j + R_ij) v in T(V)[h].
Element ideal_generator(const RelationSet &r, int i, int j, const Word &u, const Word &v) {
  Element e(r.ctx, r.order);
  auto wrap = [&](const Word &mid) {
    Word w = u;
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
  };
  e.add(wrap({j, i}), Rational(1));
  e.add(wrap({i, j}), Rational(-1));
  const Element rel = r.relation(i, j);
  for (const auto &[rw, c] : rel.terms())
    e.add(wrap(rw), c);
  return e;
}

// Insert NF(h^a u r_ij v) for every generator whose words have length L(a).
void add_generators(Space &s, Rewriter &rw, int M, const std::function<int(int)> &length,
                    std::size_t max_len, bool drop_long) {
  const RelationSet &r = rw.relations();
  std::size_t count = 0;
  for (int a = 0; a <= M; ++a) {
    const int L = length(a);
    if (L < 2)
      continue;
    const Scalar shift = Scalar::hbar_power(a, M);
    for (int split = 0; split <= L - 2; ++split) {
      const auto us = all_words(r.n, split);
      const auto vs = all_words(r.n, L - 2 - split);
      count += us.size() * vs.size() * r.rhs.size();
      check_slice_size(count, "PBW ideal generators");
      for (const auto &[ij, rel] : r.rhs)
        for (const auto &u : us)
          for (const auto &v : vs) {
            Element nf = rw.normal_form(ideal_generator(r, ij.first, ij.second, u, v), M - a);
            if (nf.is_zero())
              continue;
            s.ideal.insert(s.vec(nf.scaled(shift), max_len, drop_long));
          }
    }
  }
}

// Graded dimensions of (h-filtration, then length) on the quotient.
void graded_dims(Space &s, int M, std::map<std::pair<int, int>, int> &out,
                 const std::function<bool(int, int)> &wanted) {
  for (int k = M; k >= 0; --k) {
    std::map<int, std::vector<int>> by_len;
    for (const auto &[key, idx] : s.index)
      if (key.first == k)
        by_len[static_cast<int>(key.second.size())].push_back(idx);
    for (const auto &[len, idxs] : by_len) {
      const int before = s.ideal.rank();
      for (int idx : idxs)
        s.ideal.insert(SparseVec{{idx, Rational(1)}});
      if (wanted(k, len))
        out[{k, len}] = s.ideal.rank() - before;
    }
  }
}

} // namespace

PBWReport pbw_check(const RelationSet &r0, int N, int M) {
  if (N < 0 || M < 0)
    throw std::invalid_argument("pbw_check: N and M must be non-negative");
  const RelationSet r = r0.with_order(M);
  Rewriter rw(r);
  PBWReport rep;
  rep.n = r.n;
  rep.N = N;
  rep.M = M;
  bool ok = true;
  for (auto &d : overlap_defects(rw, M)) {
    if (!d.defect.is_zero()) {
      ok = false;
      rep.defects.push_back(std::move(d));
    }
  }

  std::map<std::pair<int, int>, int> dims;
  rep.hbar_weight = hbar_weight(r);
  if (rep.hbar_weight) {
    const int h = *rep.hbar_weight;
    std::set<int> slices;
    for (int d = 0; d <= N; ++d)
      for (int k = 0; k <= M; ++k)
        slices.insert(d + k * h);
    for (int t : slices) {
      Space s;
      for (int k = 0; k <= M; ++k) {
        const int len = t - k * h;
        if (len >= 0)
          for (auto &w : sorted_words(r.n, len))
            s.add_entry(k, std::move(w));
      }
      check_slice_size(s.entries.size(), "PBW slice");
      add_generators(s, rw, M, [&](int a) { return t - a * h; }, 0, false);
      graded_dims(s, M, dims, [&](int k, int d) {
        return d <= N && d + k * h == t;
      });
    }
  } else {
    rep.approximate = true;
    Space s;
    for (int k = 0; k <= M; ++k)
      for (int len = 0; len <= N; ++len)
        for (auto &w : sorted_words(r.n, len))
          s.add_entry(k, std::move(w));
    check_slice_size(s.entries.size(), "PBW window");
    for (int L = 2; L <= N; ++L)
      add_generators(s, rw, M, [&](int) { return L; }, N, true);
    graded_dims(s, M, dims, [&](int, int d) { return d <= N; });
  }

  rep.dims.assign(N + 1, 0);
  rep.expected.assign(N + 1, 0);
  for (int d = 0; d <= N; ++d) {
    const int e = symmetric_power_dimension(r.n, d);
    rep.expected[d] = e;
    int lo = e;
    for (int k = 0; k <= M; ++k) {
      auto it = dims.find({k, d});
      const int v = it == dims.end() ? 0 : it->second;
      rep.graded.push_back({d, k, v, e});
      lo = std::min(lo, v);
      if (v != e)
        ok = false;
    }
    rep.dims[d] = lo;
  }
  rep.pass = ok;
  return rep;
}

} // namespace pbw
