#include "pbw/kgraphs.hpp"

#include "pbw/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace pbw {

std::string to_string(GraphMode mode) { return mode == GraphMode::out2 ? "out2" : "in2"; }

std::vector<int> AdmissibleGraph::encoding() const {
  std::vector<int> e;
  for (int v = 0; v < m; ++v)
    for (int s = 0; s < 2; ++s) {
      const auto &[a, b] = edges.at(2 * v + s);
      e.push_back(mode == GraphMode::out2 ? b : a);
    }
  return e;
}

std::string AdmissibleGraph::key() const {
  std::ostringstream os;
  os << to_string(mode) << ":" << m;
  const auto e = encoding();
  for (std::size_t i = 0; i < e.size(); ++i)
    os << (i % 2 == 0 ? "|" : ",") << e[i];
  return os.str();
}

bool AdmissibleGraph::valid() const {
  if (static_cast<int>(edges.size()) != 2 * m)
    return false;
  for (int v = 0; v < m; ++v) {
    const auto &e0 = edges[2 * v], &e1 = edges[2 * v + 1];
    const int own0 = mode == GraphMode::out2 ? e0.first : e0.second;
    const int own1 = mode == GraphMode::out2 ? e1.first : e1.second;
    const int p0 = mode == GraphMode::out2 ? e0.second : e0.first;
    const int p1 = mode == GraphMode::out2 ? e1.second : e1.first;
    if (own0 != v || own1 != v || p0 == v || p1 == v || p0 == p1)
      return false;
    if (p0 < 0 || p1 < 0 || p0 > m + 1 || p1 > m + 1)
      return false;
  }
  return true;
}

namespace {

AdmissibleGraph from_encoding(int m, GraphMode mode, const std::vector<int> &enc) {
  AdmissibleGraph g{m, mode, {}};
  for (int v = 0; v < m; ++v)
    for (int s = 0; s < 2; ++s) {
      const int p = enc[2 * v + s];
      g.edges.emplace_back(mode == GraphMode::out2 ? std::make_pair(v, p) : std::make_pair(p, v));
    }
  return g;
}

} // namespace

AdmissibleGraph canonical(const AdmissibleGraph &g) {
  if (!g.valid())
    throw std::invalid_argument("canonical: not an admissible graph");
  const auto enc = g.encoding();
  std::vector<int> perm(g.m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    // perm[old] = new label; ground labels are fixed.
    std::vector<int> e(2 * g.m);
    for (int v = 0; v < g.m; ++v)
      for (int s = 0; s < 2; ++s) {
        const int p = enc[2 * v + s];
        e[2 * perm[v] + s] = p < g.m ? perm[p] : p;
      }
    if (best.empty() || e < best)
      best = e;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_encoding(g.m, g.mode, best);
}

std::vector<AdmissibleGraph> enumerate_graphs(int m, GraphMode mode, int cap) {
  if (m < 0)
    throw std::invalid_argument("enumerate_graphs: negative aerial count");
  if (m > cap)
    throw ResourceError("enumerate_graphs: m = " + std::to_string(m) + " exceeds the cap " +
                        std::to_string(cap));
  std::set<std::vector<int>> seen;
  std::vector<AdmissibleGraph> out;
  std::vector<int> enc(2 * m);
  std::function<void(int)> rec = [&](int v) {
    if (v == m) {
      AdmissibleGraph c = canonical(from_encoding(m, mode, enc));
      if (seen.insert(c.encoding()).second)
        out.push_back(std::move(c));
      return;
    }
    for (int a = 0; a < m + 2; ++a)
      for (int b = 0; b < m + 2; ++b) {
        if (a == v || b == v || a == b)
          continue;
        enc[2 * v] = a;
        enc[2 * v + 1] = b;
        rec(v + 1);
      }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const AdmissibleGraph &a, const AdmissibleGraph &b) {
              return a.encoding() < b.encoding();
            });
  return out;
}

SuperPoly graph_operator(const AdmissibleGraph &g, const std::vector<Polyvector> &inputs) {
  if (!g.valid())
    throw std::invalid_argument("graph_operator: not an admissible graph");
  const int V = g.m + 2;
  if (static_cast<int>(inputs.size()) != V)
    throw std::invalid_argument("graph_operator: need one input per vertex");
  const PolyvectorSpace space = inputs[0].space();
  const int n = inputs[0].dim();
  for (const auto &in : inputs)
    if (in.space() != space || in.dim() != n)
      throw ContextError("graph_operator: inputs live on different spaces");

  std::vector<std::vector<int>> out_edges(V), in_edges(V);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    out_edges[g.edges[e].first].push_back(e);
    in_edges[g.edges[e].second].push_back(e);
  }
  for (int v = 0; v < V; ++v) {
    for (const auto &[mono, c] : inputs[v].superfunction().terms()) {
      const int pd = SuperPoly::degree_in(mono, n, 2 * n);
      const int qd = SuperPoly::degree_in(mono, 0, n);
      const bool ok = g.mode == GraphMode::out2
                          ? pd == static_cast<int>(out_edges[v].size())
                          : qd == static_cast<int>(in_edges[v].size());
      if (!ok)
        throw std::invalid_argument("graph_operator: input at vertex " + std::to_string(v) +
                                    " does not match the vertex degree");
    }
  }

  const int E = static_cast<int>(g.edges.size());
  SuperPoly total(Polyvector::parities(space, n));
  std::vector<int> idx(E, 0);
  while (true) {
    SuperPoly prod = SuperPoly::constant(total.parities(), 1);
    for (int v = 0; v < V && !prod.is_zero(); ++v) {
      SuperPoly f = inputs[v].superfunction();
      for (auto it = out_edges[v].rbegin(); it != out_edges[v].rend() && !f.is_zero(); ++it)
        f = f.right_derivative(n + idx[*it]);
      for (int e : in_edges[v])
        f = f.left_derivative(idx[e]);
      prod = prod * f;
    }
    total += prod;
    int p = E - 1;
    while (p >= 0 && ++idx[p] == n)
      idx[p--] = 0;
    if (p < 0)
      break;
  }
  return total;
}

} // namespace pbw
