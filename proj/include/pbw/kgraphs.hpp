#pragma once

// Admissible graphs with m aerial and 2 ground vertices, and the operators
// U_Gamma they assemble (weights are not computed).

#include "pbw/polyvec.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pbw {

// out2: every aerial vertex has exactly two outgoing edges.
// in2:  every aerial vertex has exactly two incoming edges; ground vertices
//       only emit.
enum class GraphMode { out2, in2 };

std::string to_string(GraphMode mode);

// Aerial vertices are 0..m-1, ground vertices m and m+1. Edges are grouped by
// aerial vertex (two per vertex, ordered): edges[2v], edges[2v+1] leave v in
// out2 mode and enter v in in2 mode.
struct AdmissibleGraph {
  int m = 0;
  GraphMode mode = GraphMode::out2;
  std::vector<std::pair<int, int>> edges; // (source, target)

  // For each aerial vertex its two partners (targets in out2, sources in in2).
  std::vector<int> encoding() const;
  std::string key() const;
  bool valid() const;
};

AdmissibleGraph canonical(const AdmissibleGraph &g);

// Duplicate-free list up to aerial relabeling, sorted by canonical key.
// Throws ResourceError when m exceeds the cap.
std::vector<AdmissibleGraph> enumerate_graphs(int m, GraphMode mode, int cap = 3);

// Contraction: an edge s -> t carrying index i differentiates the input at s
// by the momentum p_i and the input at t by the coordinate q_i, summed over
// all indices; the result is the product over vertices in vertex order.
// inputs[v] belongs to vertex v (aerial first, then the two ground vertices).
// Shape: in out2 mode each input's momentum degree equals its out-degree; in
// in2 mode each input's coordinate degree equals its in-degree.
SuperPoly graph_operator(const AdmissibleGraph &g, const std::vector<Polyvector> &inputs);

} // namespace pbw
