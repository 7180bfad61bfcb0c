#include "pbw/errors.hpp"
#include "pbw/linalg.hpp"
#include "pbw/pbw.hpp"

#include <algorithm>
#include <functional>

namespace pbw {

std::map<std::array<int, 3>, Element> obstruction(const RelationSet &r0, int m, int N) {
  if (N < 3)
    throw std::invalid_argument("obstruction: overlaps live in degree 3, need N >= 3");
  if (m < 1)
    throw std::invalid_argument("obstruction: order must be at least 1");
  const RelationSet r = r0.with_order(m);
  Rewriter rw(r);
  std::map<std::array<int, 3>, Element> out;
  for (auto &d : overlap_defects(rw, m)) {
    if (d.first_order >= 0 && d.first_order < m)
      throw PreconditionError("obstruction: overlap (" + std::to_string(d.k + 1) + "," +
                              std::to_string(d.j + 1) + "," + std::to_string(d.i + 1) +
                              ") already fails at order h^" + std::to_string(d.first_order));
    out.emplace(std::array<int, 3>{d.k, d.j, d.i}, d.defect.hbar_layer(m));
  }
  return out;
}

namespace {

std::vector<Word> words_up_to(int n, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto &w : layer)
      for (int v = 0; v < n; ++v) {
        Word nw = w;
        nw.push_back(v);
        next.push_back(nw);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Coordinates of an obstruction map: (triple, word) -> column index.
struct Coords {
  std::map<std::pair<std::array<int, 3>, Word>, int> index;
  std::vector<std::pair<std::array<int, 3>, Word>> keys;

  SparseVec vec(const std::map<std::array<int, 3>, Element> &ob) {
    SparseVec v;
    for (const auto &[t, e] : ob)
      for (const auto &[w, c] : e.terms()) {
        auto key = std::make_pair(t, w);
        auto it = index.find(key);
        if (it == index.end()) {
          it = index.emplace(key, static_cast<int>(keys.size())).first;
          keys.push_back(key);
        }
        v[it->second] = c.coefficient(0);
      }
    return v;
  }
};

SparseVec difference(SparseVec a, const SparseVec &b) {
  axpy(a, -1, b);
  return a;
}

} // namespace

CorrectionResult solve_corrections(const RelationSet &r, int m, int degree_bound) {
  if (m < 2)
    throw std::invalid_argument("solve_corrections: corrections start at order h^2");
  const int order = std::max(r.order, m);
  const RelationSet full = r.with_order(order);
  const RelationSet rm = r.with_order(m);

  int D = degree_bound;
  if (D < 0) {
    int p = 1;
    for (const auto &[ij, e] : rm.rhs) {
      const Element layer = e.hbar_layer(1);
      for (const auto &[w, c] : layer.terms())
        p = std::max(p, static_cast<int>(w.size()));
    }
    D = p + m - 1;
  }

  CorrectionResult res;
  res.relations = full;
  res.degree_bound = D;

  Coords coords;
  const SparseVec base = coords.vec(obstruction(rm, m));

  struct Unknown {
    std::pair<int, int> ij;
    Word w;
  };
  std::vector<Unknown> unknowns;
  const auto words = words_up_to(rm.n, D);
  for (int i = 0; i < rm.n; ++i)
    for (int j = i + 1; j < rm.n; ++j)
      for (const auto &w : words)
        unknowns.push_back({{i, j}, w});
  res.unknowns = static_cast<int>(unknowns.size());
  check_slice_size(unknowns.size(), "correction unknowns");

  // The order-m defect is affine in omega; columns are finite differences.
  RowEchelon cols;
  for (const auto &u : unknowns) {
    RelationSet trial = rm;
    Element rel = trial.relation(u.ij.first, u.ij.second);
    rel.add(u.w, Scalar::hbar_power(m, m));
    trial.set(u.ij.first, u.ij.second, rel);
    cols.insert(difference(coords.vec(obstruction(trial, m)), base));
  }

  SparseVec target;
  axpy(target, -1, base);
  auto combo = cols.express(target);
  if (!combo) {
    res.feasible = false;
    const SparseVec rest = cols.reduce(base);
    for (const auto &[idx, q] : rest) {
      const auto &[t, w] = coords.keys[idx];
      auto it = res.residual.try_emplace(t, Element(rm.ctx, 0)).first;
      it->second.add(w, q);
    }
    res.message = "infeasible within degree bound D = " + std::to_string(D) +
                  "; the residual is not cancelled by any omega_" + std::to_string(m) +
                  " on words of length <= D (raise D to search further)";
    return res;
  }

  for (const auto &[idx, q] : *combo) {
    const auto &u = unknowns[idx];
    auto it = res.omega.try_emplace(u.ij, Element(full.ctx, 0)).first;
    it->second.add(u.w, q);
  }
  for (const auto &[ij, om] : res.omega) {
    Element rel = res.relations.relation(ij.first, ij.second);
    for (const auto &[w, c] : om.terms())
      rel.add(w, Scalar::hbar_power(m, order, c.coefficient(0)));
    res.relations.set(ij.first, ij.second, rel);
  }
  for (const auto &[t, e] : obstruction(res.relations.with_order(m), m))
    if (!e.is_zero())
      throw ConventionError("solve_corrections: solution does not cancel the obstruction");
  res.feasible = true;
  res.message = "omega_" + std::to_string(m) + " found on words of length <= " +
                std::to_string(D);
  return res;
}

DeformedCobar deformed_cobar(const LieAlgebra &g, int hbar_order, int check_weight) {
  if (hbar_order < 1)
    throw std::invalid_argument("deformed_cobar: h order must be at least 1");
  CobarComplex c = exterior_cobar(g.n, SignRule::koszul, hbar_order);
  const auto &ctx = c.context();
  Derivation d1;
  d1.degree = 1;
  d1.rule = SignRule::koszul;
  for (int id = 0; id < ctx->size(); ++id) {
    const BasisKey &key = (*ctx)[id].key;
    const int k = static_cast<int>(key.size());
    if (k < 2)
      continue;
    // Chevalley-Eilenberg: sum_{a<b} (-1)^{a+b} [g_a, g_b] ^ g_1 .. ^a ^b .. g_k.
    Element v(ctx, hbar_order);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (const auto &[m, q] : g.bracket(key[a], key[b])) {
          std::vector<int> rest{m};
          for (int t = 0; t < k; ++t)
            if (t != a && t != b)
              rest.push_back(key[t]);
          if (std::count(rest.begin(), rest.end(), m) > 1)
            continue;
          int sign = (a + b) % 2 == 0 ? 1 : -1;
          for (std::size_t s = 0; s < rest.size(); ++s)
            for (std::size_t t = s + 1; t < rest.size(); ++t)
              if (rest[s] > rest[t])
                sign = -sign;
          std::sort(rest.begin(), rest.end());
          v.add(Word{ctx->id_of_key(rest)}, Scalar::hbar_power(1, hbar_order, q * sign));
        }
    if (!v.is_zero())
      d1.values.emplace(id, std::move(v));
  }
  c.set_deformation(std::move(d1));

  DeformedCobar out{std::move(c), true, std::nullopt};
  for (int w = 1; w <= check_weight && out.square_zero; ++w)
    for (int deg = -w; deg <= -2; ++deg)
      if (auto wit = square_zero_witness(out.complex, deg, w, true)) {
        out.square_zero = false;
        out.witness = wit;
        break;
      }
  return out;
}

H0Presentation h0_presentation(const DeformedCobar &c, int N, int M) {
  if (!c.square_zero)
    throw PreconditionError("h0_presentation: the deformed differential does not square to zero");
  const CobarComplex &cx = c.complex;
  const int n = cx.spec().dim;
  RelationSet rel(n, M);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element d = cx.differential(cx.letter_element({i, j}));
      Element r(rel.ctx, M);
      r.add(Word{i, j}, Rational(1));
      r.add(Word{j, i}, Rational(-1));
      for (const auto &[w, sc] : d.terms()) {
        Word x;
        for (int l : w) {
          const auto &key = (*cx.context())[l].key;
          if (key.size() != 1)
            throw std::logic_error("h0_presentation: d(xi_ij) left the coordinate letters");
          x.push_back(key[0]);
        }
        Scalar s(M);
        for (int k = 0; k <= std::min(M, sc.order()); ++k)
          s.set(k, -sc[k]);
        r.add(x, s);
      }
      if (!r.is_zero())
        rel.set(i, j, r);
    }
  return {rel, pbw_check(rel, N, M)};
}

} // namespace pbw
