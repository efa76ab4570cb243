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

#ifndef GMIX_GRAPH_H_
#define GMIX_GRAPH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmix {

using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Counts of input records dropped while building a simple graph.
struct GraphDiagnostics {
  int64_t self_loops = 0;
  int64_t duplicate_edges = 0;
};

// Simple undirected graph. Adjacency is held as one bitset row per node so
// membership tests are O(1) and neighbourhood intersections are word-parallel.
// Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from arbitrary pairs; self-loops and repeats are dropped
  // and tallied in `diag` when given. Throws RangeError on out-of-range ends.
  static Graph from_edges(int node_count, std::span<const Edge> edges,
                          GraphDiagnostics* diag = nullptr);

  int node_count() const { return node_count_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

  // Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  int words() const { return words_; }
  std::span<const uint64_t> row(int u) const {
    return {rows_.data() + static_cast<size_t>(u) * words_,
            static_cast<size_t>(words_)};
  }

  int degree(int u) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<uint64_t> rows_;
};

std::vector<int> degree_sequence(const Graph& g);

// Stable 64-bit content hash of (node_count, sorted edge list).
uint64_t graph_key(const Graph& g);

// Dataset of graphs with optional class labels in {1..class_count}.
struct LabeledDataset {
  std::vector<Graph> graphs;
  std::vector<int> labels;  // empty when unlabeled
  int class_count = 0;
  // Original label value for each contiguous class id (index c - 1).
  std::vector<int64_t> label_values;
  GraphDiagnostics diagnostics;

  bool labeled() const { return !labels.empty(); }
  // Throws std::invalid_argument when the label invariants do not hold.
  void validate() const;
};

struct EdgeListResult {
  Graph graph;
  GraphDiagnostics diagnostics;
};

// Reads whitespace-separated "u v" lines. Lines starting with '#' are
// comments, except a "# node_count N" header which supplies the node count
// when `node_count` is not given.
EdgeListResult parse_edge_list(std::istream& in,
                               std::optional<int> node_count = std::nullopt);
EdgeListResult read_edge_list_file(const std::filesystem::path& path,
                                   std::optional<int> node_count = std::nullopt);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

// Reads the TU raw layout: <name>_A.txt, <name>_graph_indicator.txt and
// <name>_graph_labels.txt inside `dir`.
LabeledDataset parse_tu_dataset(const std::filesystem::path& dir,
                                const std::string& name);

}  // namespace gmix

#endif  // GMIX_GRAPH_H_
