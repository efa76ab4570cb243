// Copyright 2026 The gmix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMIX_MOTIF_H_
#define GMIX_MOTIF_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gmix/graph.h"

namespace gmix {

// A connected pattern graph on vertices {0..vertex_count-1}.
struct Motif {
  int id = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;
  int automorphism_count = 0;
  // Maximum over vertex relabelings of the upper-triangle adjacency bits,
  // pair (i, j) with i < j at bit position of its lexicographic rank.
  uint32_t canonical_code = 0;
  std::string name;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
};

// All connected motifs with 2..max_k vertices, ordered by
// (vertex_count, edge_count, canonical_code). max_k must be 4 (9 motifs) or
// 5 (30 motifs); ids are positions in that order.
std::vector<Motif> motif_family(int max_k);

// Builds a motif from an edge list (canonical code and automorphisms are
// computed). Throws std::invalid_argument if disconnected or not simple.
Motif make_motif(int vertex_count, std::vector<Edge> edges);

// n (n-1) ... (n-k+1).
uint64_t falling_factorial(int64_t n, int k);

// Number of injective maps V(F) -> V(G) sending every motif edge to a graph
// edge, i.e. |Aut(F)| times the number of (not necessarily induced) copies.
// Closed-form counting for k <= 4, pruned enumeration otherwise.
uint64_t injective_count(const Graph& g, const Motif& f);

// Pruned backtracking counter valid for any pattern; the last two
// (non-adjacent) pattern vertices are counted from bitset cardinalities.
uint64_t enumerate_injective_count(const Graph& g, const Motif& f);

// Injective homomorphism density injective_count / falling_factorial(n, k).
// Returns 0 when n < k.
double empirical_density(const Graph& g, const Motif& f);

// Exhaustive count over all ordered k-tuples of distinct nodes.
struct ExactDensity {
  uint64_t hits = 0;
  uint64_t tuples = 0;
  double value() const {
    return tuples == 0 ? 0.0
                       : static_cast<double>(hits) / static_cast<double>(tuples);
  }
};

inline constexpr int kBruteForceNodeCap = 200;

// Throws std::invalid_argument if f has more than 5 vertices or g exceeds
// node_cap.
ExactDensity brute_force_count(const Graph& g, const Motif& f,
                               int node_cap = kBruteForceNodeCap);
double brute_force_density(const Graph& g, const Motif& f,
                           int node_cap = kBruteForceNodeCap);

struct MomentVector {
  std::vector<double> values;
  // degenerate[i] is set when the graph has fewer nodes than motif i.
  std::vector<bool> degenerate;

  size_t size() const { return values.size(); }
  bool any_degenerate() const;
};

MomentVector moment_vector(const Graph& g, std::span<const Motif> family);

// Header "graph,<id>:<name>,..." then one row per vector, 17 significant
// digits.
void write_moment_csv(std::ostream& out, std::span<const Motif> family,
                      std::span<const MomentVector> vectors);

// Reads the format above; returns rows of densities in file order.
std::vector<std::vector<double>> read_moment_csv(std::istream& in);

}  // namespace gmix

#endif  // GMIX_MOTIF_H_
