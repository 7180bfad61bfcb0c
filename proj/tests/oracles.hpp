#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algebra routines; inputs are read off raw data only.

#include "pbw/polyvec.hpp"
#include "pbw/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using pbw::Rational;

// Commutative polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Rational>;

inline void add(Poly &p, const std::vector<int> &e, const Rational &c) {
  if (c == 0)
    return;
  auto &slot = p[e];
  slot += c;
  if (slot == 0)
    p.erase(e);
}

inline Poly plus(const Poly &a, const Poly &b, const Rational &s = 1) {
  Poly r = a;
  for (const auto &[e, c] : b)
    add(r, e, s * c);
  return r;
}

inline Poly times(const Poly &a, const Poly &b) {
  Poly r;
  for (const auto &[ea, ca] : a)
    for (const auto &[eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      add(r, e, ca * cb);
    }
  return r;
}

inline Poly diff(const Poly &a, int v) {
  Poly r;
  for (const auto &[exps, c] : a)
    if (exps[v] > 0) {
      std::vector<int> e = exps;
      const Rational k = e[v];
      --e[v];
      add(r, e, c * k);
    }
  return r;
}

inline Poly variable(int n, int v) {
  std::vector<int> e(n, 0);
  e[v] = 1;
  return Poly{{e, Rational(1)}};
}

// alpha[i][j], antisymmetric.
using Bivector = std::vector<std::vector<Poly>>;

inline Bivector to_bivector(const pbw::PoissonBivector &a) {
  Bivector b(a.n, std::vector<Poly>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      const pbw::SuperPoly e = a.entry(i, j);
      for (const auto &[m, c] : e.terms())
        add(b[i][j], m, c);
    }
  return b;
}

inline Poly bracket(const Bivector &a, const Poly &f, const Poly &g) {
  const int n = static_cast<int>(a.size());
  Poly r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!a[i][j].empty())
        r = plus(r, times(a[i][j], times(diff(f, i), diff(g, j))));
  return r;
}

// {x_i,{x_j,x_k}} + cyclic.
inline Poly jacobi(const Bivector &a, int i, int j, int k) {
  const int n = static_cast<int>(a.size());
  auto x = [&](int v) { return variable(n, v); };
  Poly r = bracket(a, x(i), bracket(a, x(j), x(k)));
  r = plus(r, bracket(a, x(j), bracket(a, x(k), x(i))));
  return plus(r, bracket(a, x(k), bracket(a, x(i), x(j))));
}

inline bool is_poisson(const Bivector &a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (!jacobi(a, i, j, k).empty())
          return false;
  return true;
}

// Structure constants c[i][j][k] = coefficient of e_k in [e_i,e_j].
using Constants = std::vector<std::vector<std::vector<Rational>>>;

inline Constants zero_constants(int n) {
  return Constants(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
}

// Jacobi identity expanded by hand over the structure constants.
inline bool lie_jacobi(const Constants &c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rational s = 0;
          for (int l = 0; l < n; ++l)
            s += c[j][k][l] * c[i][l][m] + c[k][i][l] * c[j][l][m] + c[i][j][l] * c[k][l][m];
          if (s != 0)
            return false;
        }
  return true;
}

inline Rational det3(const std::array<std::array<Rational, 3>, 3> &p) {
  return p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) -
         p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0]) +
         p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]);
}

// Constants in the basis e'_i = sum_a P[a][i] e_a.
inline Constants change_basis(const Constants &c, const std::array<std::array<Rational, 3>, 3> &P) {
  std::array<std::array<Rational, 3>, 3> inv;
  const Rational d = det3(P);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      // cofactor of P[s][r]
      const int a0 = (s + 1) % 3, a1 = (s + 2) % 3, b0 = (r + 1) % 3, b1 = (r + 2) % 3;
      inv[r][s] = (P[a0][b0] * P[a1][b1] - P[a0][b1] * P[a1][b0]) / d;
    }
  Constants out = zero_constants(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int k = 0; k < 3; ++k)
            if (c[a][b][k] != 0)
              for (int l = 0; l < 3; ++l)
                out[i][j][l] += P[a][i] * P[b][j] * c[a][b][k] * inv[l][k];
  return out;
}

// Symmetrization of a monomial given as an exponent vector: every distinct
// arrangement w of the letters with coefficient prod(m_i!)/k!.
inline std::map<std::vector<int>, Rational> sym(const std::vector<int> &exps) {
  std::vector<int> w;
  Rational weight = 1;
  for (int v = 0; v < static_cast<int>(exps.size()); ++v)
    for (int t = 0; t < exps[v]; ++t) {
      w.push_back(v);
      weight *= t + 1;
    }
  for (int t = 1; t <= static_cast<int>(w.size()); ++t)
    weight /= t;
  std::map<std::vector<int>, Rational> out;
  do
    out[w] = weight;
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Admissible graphs counted by brute force: all edge assignments, then
// classes under relabelling of the aerial vertices 0..m-1 (grounds m, m+1).
// out2: each aerial vertex has an ordered pair of distinct targets other than
// itself. Reversing every edge turns these into the in2 graphs, so the same
// count applies there.
inline std::size_t count_graphs(int m) {
  const int V = m + 2;
  std::vector<std::pair<int, int>> choices;
  for (int a = 0; a < V; ++a)
    for (int b = 0; b < V; ++b)
      if (a != b)
        choices.push_back({a, b});
  std::set<std::vector<std::array<int, 3>>> classes; // (aerial, slot, other end)
  std::vector<int> pick(m, 0);
  auto valid = [&](int v, std::pair<int, int> c) { return c.first != v && c.second != v; };
  while (true) {
    bool ok = true;
    for (int v = 0; v < m; ++v)
      ok = ok && valid(v, choices[pick[v]]);
    if (ok) {
      std::vector<int> perm(m);
      for (int v = 0; v < m; ++v)
        perm[v] = v;
      std::vector<std::array<int, 3>> best;
      do {
        std::vector<std::array<int, 3>> enc;
        for (int v = 0; v < m; ++v) {
          auto relabel = [&](int u) { return u < m ? perm[u] : u; };
          enc.push_back({perm[v], 0, relabel(choices[pick[v]].first)});
          enc.push_back({perm[v], 1, relabel(choices[pick[v]].second)});
        }
        std::sort(enc.begin(), enc.end());
        if (best.empty() || enc < best)
          best = enc;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    int v = 0;
    while (v < m && ++pick[v] == static_cast<int>(choices.size()))
      pick[v++] = 0;
    if (v == m)
      break;
  }
  return classes.size();
}

} // namespace oracle
