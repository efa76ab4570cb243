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

#include "gmix/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace gmix {

namespace {

bool parse_int(std::string_view token, int64_t& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_tokens(std::string_view line,
                                           std::string_view separators) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos < line.size()) {
    const size_t start = line.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) break;
    size_t end = line.find_first_of(separators, start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

// One integer per non-blank line.
std::vector<int64_t> read_int_column(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<int64_t> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    int64_t v = 0;
    if (!parse_int(t, v)) {
      throw ParseError(path.filename().string() + ":" +
                           std::to_string(line_no) + ": expected an integer",
                       line_no);
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

Graph Graph::from_edges(int node_count, std::span<const Edge> edges,
                        GraphDiagnostics* diag) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  Graph g;
  g.node_count_ = node_count;
  g.words_ = (node_count + 63) / 64;
  g.rows_.assign(static_cast<size_t>(node_count) * g.words_, 0);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") outside node range [0, " +
                       std::to_string(node_count) + ")");
    }
    if (u == v) {
      if (diag) ++diag->self_loops;
      continue;
    }
    if (g.adjacent(u, v)) {
      if (diag) ++diag->duplicate_edges;
      continue;
    }
    g.rows_[static_cast<size_t>(u) * g.words_ + (v >> 6)] |= 1ULL << (v & 63);
    g.rows_[static_cast<size_t>(v) * g.words_ + (u >> 6)] |= 1ULL << (u & 63);
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

int Graph::degree(int u) const {
  int d = 0;
  for (uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<size_t>(g.node_count()));
  for (int u = 0; u < g.node_count(); ++u) deg[u] = g.degree(u);
  return deg;
}

uint64_t graph_key(const Graph& g) {
  // FNV-1a over the canonical serialisation.
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<uint64_t>(g.node_count()));
  for (auto [u, v] : g.edges()) {
    mix(static_cast<uint64_t>(u));
    mix(static_cast<uint64_t>(v));
  }
  return h;
}

void LabeledDataset::validate() const {
  if (labels.empty()) return;
  if (labels.size() != graphs.size()) {
    throw std::invalid_argument("label count does not match graph count");
  }
  for (int y : labels) {
    if (y < 1 || y > class_count) {
      throw std::invalid_argument("class index " + std::to_string(y) +
                                  " outside [1, " +
                                  std::to_string(class_count) + "]");
    }
  }
}

EdgeListResult parse_edge_list(std::istream& in, std::optional<int> node_count) {
  std::vector<Edge> edges;
  std::optional<int> header_count;
  std::string line;
  int line_no = 0;
  int max_index = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const auto tokens = split_tokens(t.substr(1), " \t");
      int64_t n = 0;
      if (tokens.size() == 2 && tokens[0] == "node_count" &&
          parse_int(tokens[1], n) && n >= 0) {
        header_count = static_cast<int>(n);
      }
      continue;
    }
    const auto tokens = split_tokens(t, " \t,");
    int64_t u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v) || u < 0 || v < 0 || u > INT32_MAX ||
        v > INT32_MAX) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two nonnegative integers \"u v\"",
                       line_no);
    }
    if (node_count && (u >= *node_count || v >= *node_count)) {
      throw RangeError("line " + std::to_string(line_no) + ": node index " +
                       std::to_string(std::max(u, v)) +
                       " >= node_count " + std::to_string(*node_count));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max<int>(max_index, static_cast<int>(std::max(u, v)));
  }
  int n = max_index + 1;
  if (node_count) {
    n = *node_count;
  } else if (header_count) {
    if (max_index >= *header_count) {
      throw RangeError("node index " + std::to_string(max_index) +
                       " >= declared node_count " +
                       std::to_string(*header_count));
    }
    n = *header_count;
  }
  EdgeListResult result;
  result.graph = Graph::from_edges(n, edges, &result.diagnostics);
  return result;
}

EdgeListResult read_edge_list_file(const std::filesystem::path& path,
                                   std::optional<int> node_count) {
  std::ifstream in = open_or_throw(path);
  return parse_edge_list(in, node_count);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# node_count " << g.node_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

LabeledDataset parse_tu_dataset(const std::filesystem::path& dir,
                                const std::string& name) {
  const auto a_path = dir / (name + "_A.txt");
  const auto ind_path = dir / (name + "_graph_indicator.txt");
  const auto lab_path = dir / (name + "_graph_labels.txt");
  for (const auto& p : {a_path, ind_path, lab_path}) {
    if (!std::filesystem::exists(p)) {
      throw std::runtime_error("missing file " + p.string());
    }
  }

  const std::vector<int64_t> indicator = read_int_column(ind_path);
  const std::vector<int64_t> raw_labels = read_int_column(lab_path);

  int64_t graph_count = 0;
  for (size_t i = 0; i < indicator.size(); ++i) {
    if (indicator[i] < 1) {
      throw ParseError(ind_path.filename().string() + ":" +
                           std::to_string(i + 1) + ": graph id must be >= 1",
                       static_cast<int>(i + 1));
    }
    graph_count = std::max(graph_count, indicator[i]);
  }
  if (static_cast<int64_t>(raw_labels.size()) != graph_count) {
    throw std::runtime_error(
        "ragged dataset: " + std::to_string(raw_labels.size()) +
        " graph labels for " + std::to_string(graph_count) + " graphs");
  }

  // Global node (0-based) -> local index within its graph.
  std::vector<int> local(indicator.size());
  std::vector<int> sizes(static_cast<size_t>(graph_count), 0);
  for (size_t i = 0; i < indicator.size(); ++i) {
    local[i] = sizes[indicator[i] - 1]++;
  }

  std::vector<std::vector<Edge>> edges(static_cast<size_t>(graph_count));
  {
    std::ifstream in = open_or_throw(a_path);
    std::string line;
    int line_no = 0;
    const int64_t node_total = static_cast<int64_t>(indicator.size());
    while (std::getline(in, line)) {
      ++line_no;
      const auto t = trim(line);
      if (t.empty()) continue;
      const auto tokens = split_tokens(t, " \t,");
      int64_t u = 0, v = 0;
      if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
          !parse_int(tokens[1], v)) {
        throw ParseError(a_path.filename().string() + ":" +
                             std::to_string(line_no) +
                             ": expected \"u, v\"",
                         line_no);
      }
      if (u < 1 || v < 1 || u > node_total || v > node_total) {
        throw RangeError(a_path.filename().string() + ":" +
                         std::to_string(line_no) + ": node outside [1, " +
                         std::to_string(node_total) + "]");
      }
      const int64_t gu = indicator[u - 1];
      if (gu != indicator[v - 1]) {
        throw RangeError(a_path.filename().string() + ":" +
                         std::to_string(line_no) + ": edge joins graphs " +
                         std::to_string(gu) + " and " +
                         std::to_string(indicator[v - 1]));
      }
      edges[gu - 1].emplace_back(local[u - 1], local[v - 1]);
    }
  }

  LabeledDataset ds;
  std::vector<int64_t> distinct = raw_labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  ds.label_values = distinct;
  ds.class_count = static_cast<int>(distinct.size());
  ds.graphs.reserve(static_cast<size_t>(graph_count));
  ds.labels.reserve(static_cast<size_t>(graph_count));
  for (int64_t gi = 0; gi < graph_count; ++gi) {
    ds.graphs.push_back(
        Graph::from_edges(sizes[gi], edges[gi], &ds.diagnostics));
    const auto it =
        std::lower_bound(distinct.begin(), distinct.end(), raw_labels[gi]);
    ds.labels.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return ds;
}

}  // namespace gmix
