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

#include "gmix/motif.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gmix/csv.h"

namespace gmix {

namespace {

int pair_rank(int i, int j, int k) {
  // Lexicographic rank of (i, j), i < j, among pairs of {0..k-1}.
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

uint32_t code_of(int k, std::span<const Edge> edges, std::span<const int> perm) {
  uint32_t code = 0;
  for (auto [u, v] : edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    code |= 1u << pair_rank(a, b, k);
  }
  return code;
}

bool connected(int k, std::span<const Edge> edges) {
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = k;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

enum class SmallShape {
  kEdge,
  kPath3,
  kTriangle,
  kStar4,
  kPath4,
  kCycle4,
  kPaw,
  kDiamond,
  kClique4,
  kOther,
};

SmallShape classify(const Motif& f) {
  const int k = f.vertex_count;
  const int e = f.edge_count();
  std::vector<int> deg(k, 0);
  for (auto [u, v] : f.edges) {
    ++deg[u];
    ++deg[v];
  }
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  if (k == 2) return SmallShape::kEdge;
  if (k == 3) return e == 2 ? SmallShape::kPath3 : SmallShape::kTriangle;
  if (k == 4) {
    switch (e) {
      case 3: return max_deg == 3 ? SmallShape::kStar4 : SmallShape::kPath4;
      case 4: return max_deg == 3 ? SmallShape::kPaw : SmallShape::kCycle4;
      case 5: return SmallShape::kDiamond;
      case 6: return SmallShape::kClique4;
    }
  }
  return SmallShape::kOther;
}

std::string default_name(const Motif& f) {
  switch (classify(f)) {
    case SmallShape::kEdge: return "edge";
    case SmallShape::kPath3: return "path3";
    case SmallShape::kTriangle: return "triangle";
    case SmallShape::kStar4: return "star4";
    case SmallShape::kPath4: return "path4";
    case SmallShape::kCycle4: return "cycle4";
    case SmallShape::kPaw: return "paw";
    case SmallShape::kDiamond: return "diamond";
    case SmallShape::kClique4: return "clique4";
    case SmallShape::kOther: break;
  }
  return "k" + std::to_string(f.vertex_count) + "e" +
         std::to_string(f.edge_count()) + "c" +
         std::to_string(f.canonical_code);
}

uint64_t choose2(uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
uint64_t choose3(uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

int popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

// Copy counts of every connected pattern on at most four vertices.
struct SmallCounts {
  uint64_t edge = 0, path3 = 0, triangle = 0, star4 = 0, path4 = 0,
           cycle4 = 0, paw = 0, diamond = 0, clique4 = 0;
};

SmallCounts count_small(const Graph& g) {
  SmallCounts c;
  const int n = g.node_count();
  const int words = g.words();
  const std::vector<int> deg = degree_sequence(g);

  c.edge = static_cast<uint64_t>(g.edge_count());
  for (int d : deg) {
    c.path3 += choose2(d);
    c.star4 += choose3(d);
  }

  // Codegree of every unordered pair drives triangles (adjacent pairs) and
  // 4-cycles (each cycle is seen once from each of its two diagonals).
  std::vector<uint64_t> tri_at(n, 0);
  uint64_t tri_sum = 0, cycle_twice = 0, diamond = 0, path4_raw = 0;
  for (int u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (int v = u + 1; v < n; ++v) {
      const uint64_t cd = popcount_and(ru, g.row(v));
      cycle_twice += choose2(cd);
      if (g.adjacent(u, v)) {
        tri_sum += cd;
        tri_at[u] += cd;
        tri_at[v] += cd;
        diamond += choose2(cd);
        path4_raw += static_cast<uint64_t>(deg[u] - 1) * (deg[v] - 1);
      }
    }
  }
  c.triangle = tri_sum / 3;
  c.cycle4 = cycle_twice / 2;
  c.diamond = diamond;
  // Every (d_u-1)(d_v-1) term with coinciding ends is a triangle; each
  // triangle is hit once per edge.
  c.path4 = path4_raw - 3 * c.triangle;
  for (int v = 0; v < n; ++v) {
    const uint64_t t = tri_at[v] / 2;
    if (deg[v] >= 2) c.paw += t * static_cast<uint64_t>(deg[v] - 2);
  }

  std::vector<uint64_t> common(words);
  uint64_t k4_sixfold = 0;
  for (auto [u, v] : g.edges()) {
    const auto ru = g.row(u), rv = g.row(v);
    bool any = false;
    for (int w = 0; w < words; ++w) {
      common[w] = ru[w] & rv[w];
      any |= common[w] != 0;
    }
    if (!any) continue;
    uint64_t inner = 0;
    for (int w = 0; w < words; ++w) {
      uint64_t bits = common[w];
      while (bits) {
        const int x = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        inner += popcount_and(g.row(x), common);
      }
    }
    k4_sixfold += inner / 2;
  }
  c.clique4 = k4_sixfold / 6;
  return c;
}

uint64_t small_copies(const SmallCounts& c, SmallShape s) {
  switch (s) {
    case SmallShape::kEdge: return c.edge;
    case SmallShape::kPath3: return c.path3;
    case SmallShape::kTriangle: return c.triangle;
    case SmallShape::kStar4: return c.star4;
    case SmallShape::kPath4: return c.path4;
    case SmallShape::kCycle4: return c.cycle4;
    case SmallShape::kPaw: return c.paw;
    case SmallShape::kDiamond: return c.diamond;
    case SmallShape::kClique4: return c.clique4;
    case SmallShape::kOther: break;
  }
  throw std::logic_error("not a small motif");
}

double ratio(uint64_t count, int64_t n, int k) {
  return static_cast<double>(count) /
         static_cast<double>(falling_factorial(n, k));
}

// Search plan for enumerate_injective_count.
struct EnumerationPlan {
  std::vector<int> prefix;                 // pattern vertices, search order
  std::vector<std::vector<int>> back;      // earlier prefix positions adjacent
  std::vector<std::vector<int>> tail_back; // per tail vertex, prefix positions
};

EnumerationPlan plan_for(const Motif& f) {
  const int k = f.vertex_count;
  std::vector<int> deg(k, 0);
  for (auto [u, v] : f.edges) {
    ++deg[u];
    ++deg[v];
  }
  // Tail: a non-adjacent pair of smallest total degree, or a single vertex.
  std::vector<int> tail;
  int best = -1;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (f.has_edge(a, b)) continue;
      if (best < 0 || deg[a] + deg[b] < best) {
        best = deg[a] + deg[b];
        tail = {a, b};
      }
    }
  }
  if (tail.empty()) {
    tail = {static_cast<int>(std::min_element(deg.begin(), deg.end()) -
                             deg.begin())};
  }

  EnumerationPlan plan;
  std::vector<bool> placed(k, false);
  for (int t : tail) placed[t] = true;
  const int prefix_size = k - static_cast<int>(tail.size());
  while (static_cast<int>(plan.prefix.size()) < prefix_size) {
    int pick = -1, pick_links = -1, pick_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int p : plan.prefix) links += f.has_edge(v, p);
      if (links > pick_links || (links == pick_links && deg[v] > pick_deg)) {
        pick = v;
        pick_links = links;
        pick_deg = deg[v];
      }
    }
    placed[pick] = true;
    std::vector<int> back;
    for (size_t p = 0; p < plan.prefix.size(); ++p) {
      if (f.has_edge(pick, plan.prefix[p])) back.push_back(static_cast<int>(p));
    }
    plan.prefix.push_back(pick);
    plan.back.push_back(std::move(back));
  }
  for (int t : tail) {
    std::vector<int> back;
    for (size_t p = 0; p < plan.prefix.size(); ++p) {
      if (f.has_edge(t, plan.prefix[p])) back.push_back(static_cast<int>(p));
    }
    plan.tail_back.push_back(std::move(back));
  }
  return plan;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const EnumerationPlan& plan)
      : g_(g), plan_(plan), words_(g.words()),
        mapped_(plan.prefix.size(), -1),
        level_(plan.prefix.size() + 1, std::vector<uint64_t>(words_)),
        full_(words_, ~0ULL), tail_a_(words_), tail_b_(words_) {
    const int n = g.node_count();
    if (n % 64 != 0 && words_ > 0) full_.back() = (1ULL << (n % 64)) - 1;
  }

  uint64_t run() {
    total_ = 0;
    descend(0);
    return total_;
  }

 private:
  void intersect(std::span<const int> back, std::vector<uint64_t>& out) const {
    if (back.empty()) {
      out = full_;
      return;
    }
    const auto first = g_.row(mapped_[back[0]]);
    std::copy(first.begin(), first.end(), out.begin());
    for (size_t i = 1; i < back.size(); ++i) {
      const auto r = g_.row(mapped_[back[i]]);
      for (int w = 0; w < words_; ++w) out[w] &= r[w];
    }
  }

  bool contains(const std::vector<uint64_t>& set, int x) const {
    return (set[x >> 6] >> (x & 63)) & 1;
  }

  // |set \ mapped|
  int64_t free_count(const std::vector<uint64_t>& set) const {
    int64_t c = 0;
    for (uint64_t w : set) c += std::popcount(w);
    for (int m : mapped_) c -= contains(set, m);
    return c;
  }

  void descend(size_t pos) {
    if (pos == plan_.prefix.size()) {
      count_tail();
      return;
    }
    auto& cand = level_[pos];
    intersect(plan_.back[pos], cand);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        const int x = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        bool used = false;
        for (size_t p = 0; p < pos; ++p) used |= mapped_[p] == x;
        if (used) continue;
        mapped_[pos] = x;
        descend(pos + 1);
      }
    }
    mapped_[pos] = -1;
  }

  void count_tail() {
    intersect(plan_.tail_back[0], tail_a_);
    const int64_t a = free_count(tail_a_);
    if (plan_.tail_back.size() == 1) {
      total_ += static_cast<uint64_t>(a);
      return;
    }
    intersect(plan_.tail_back[1], tail_b_);
    const int64_t b = free_count(tail_b_);
    for (int w = 0; w < words_; ++w) tail_b_[w] &= tail_a_[w];
    const int64_t both = free_count(tail_b_);
    // Ordered pairs of distinct free nodes (x in A, y in B).
    total_ += static_cast<uint64_t>(a * b - both);
  }

  const Graph& g_;
  const EnumerationPlan& plan_;
  int words_;
  std::vector<int> mapped_;
  std::vector<std::vector<uint64_t>> level_;
  std::vector<uint64_t> full_, tail_a_, tail_b_;
  uint64_t total_ = 0;
};

}  // namespace

bool Motif::has_edge(int u, int v) const {
  for (auto [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

Motif make_motif(int vertex_count, std::vector<Edge> edges) {
  const int k = vertex_count;
  if (k < 2 || k > 6) throw std::invalid_argument("motif size must be 2..6");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= k || v >= k || u == v) {
      throw std::invalid_argument("motif edge out of range or self-loop");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("motif has repeated edges");
  }
  if (!connected(k, edges)) throw std::invalid_argument("motif is disconnected");

  Motif f;
  f.vertex_count = k;
  f.edges = std::move(edges);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  const uint32_t own = code_of(k, f.edges, perm);
  do {
    const uint32_t c = code_of(k, f.edges, perm);
    f.canonical_code = std::max(f.canonical_code, c);
    if (c == own) ++f.automorphism_count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  f.name = default_name(f);
  return f;
}

std::vector<Motif> motif_family(int max_k) {
  if (max_k != 4 && max_k != 5) {
    throw std::invalid_argument("motif family supports max_k of 4 or 5, got " +
                                std::to_string(max_k));
  }
  std::vector<Motif> family;
  for (int k = 2; k <= max_k; ++k) {
    std::vector<Edge> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::vector<uint32_t> seen;
    for (uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1) edges.push_back(pairs[p]);
      if (!connected(k, edges)) continue;
      Motif f = make_motif(k, std::move(edges));
      if (std::find(seen.begin(), seen.end(), f.canonical_code) != seen.end())
        continue;
      seen.push_back(f.canonical_code);
      family.push_back(std::move(f));
    }
  }
  std::sort(family.begin(), family.end(), [](const Motif& a, const Motif& b) {
    return std::tuple(a.vertex_count, a.edge_count(), a.canonical_code) <
           std::tuple(b.vertex_count, b.edge_count(), b.canonical_code);
  });
  for (size_t i = 0; i < family.size(); ++i) family[i].id = static_cast<int>(i);
  return family;
}

uint64_t falling_factorial(int64_t n, int k) {
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (n - i <= 0) return 0;
    r *= static_cast<uint64_t>(n - i);
  }
  return r;
}

uint64_t enumerate_injective_count(const Graph& g, const Motif& f) {
  if (g.node_count() < f.vertex_count) return 0;
  const EnumerationPlan plan = plan_for(f);
  Enumerator e(g, plan);
  return e.run();
}

uint64_t injective_count(const Graph& g, const Motif& f) {
  if (g.node_count() < f.vertex_count) return 0;
  const SmallShape shape = classify(f);
  if (shape == SmallShape::kOther) return enumerate_injective_count(g, f);
  return static_cast<uint64_t>(f.automorphism_count) *
         small_copies(count_small(g), shape);
}

double empirical_density(const Graph& g, const Motif& f) {
  if (g.node_count() < f.vertex_count) return 0.0;
  return ratio(injective_count(g, f), g.node_count(), f.vertex_count);
}

ExactDensity brute_force_count(const Graph& g, const Motif& f, int node_cap) {
  const int k = f.vertex_count;
  const int n = g.node_count();
  if (k > 5) throw std::invalid_argument("brute force supports motifs up to 5 nodes");
  if (n > node_cap) {
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " nodes, above the brute-force cap of " +
                                std::to_string(node_cap));
  }
  ExactDensity out;
  if (n < k) return out;
  // Odometer over all of [0, n)^k.
  std::vector<int> t(k, 0);
  while (true) {
    bool distinct = true;
    for (int i = 0; i < k && distinct; ++i)
      for (int j = i + 1; j < k; ++j)
        if (t[i] == t[j]) {
          distinct = false;
          break;
        }
    if (distinct) {
      ++out.tuples;
      bool hit = true;
      for (auto [u, v] : f.edges) {
        if (!g.adjacent(t[u], t[v])) {
          hit = false;
          break;
        }
      }
      out.hits += hit;
    }
    int pos = k - 1;
    while (pos >= 0 && ++t[pos] == n) t[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

double brute_force_density(const Graph& g, const Motif& f, int node_cap) {
  return brute_force_count(g, f, node_cap).value();
}

bool MomentVector::any_degenerate() const {
  return std::find(degenerate.begin(), degenerate.end(), true) !=
         degenerate.end();
}

MomentVector moment_vector(const Graph& g, std::span<const Motif> family) {
  MomentVector mv;
  mv.values.resize(family.size(), 0.0);
  mv.degenerate.resize(family.size(), false);
  const int n = g.node_count();
  bool small_ready = false;
  SmallCounts small;
  for (size_t i = 0; i < family.size(); ++i) {
    const Motif& f = family[i];
    if (n < f.vertex_count) {
      mv.degenerate[i] = true;
      continue;
    }
    const SmallShape shape = classify(f);
    uint64_t count = 0;
    if (shape == SmallShape::kOther) {
      count = enumerate_injective_count(g, f);
    } else {
      if (!small_ready) {
        small = count_small(g);
        small_ready = true;
      }
      count = static_cast<uint64_t>(f.automorphism_count) *
              small_copies(small, shape);
    }
    mv.values[i] = ratio(count, n, f.vertex_count);
  }
  return mv;
}

void write_moment_csv(std::ostream& out, std::span<const Motif> family,
                      std::span<const MomentVector> vectors) {
  out << "graph";
  for (const Motif& f : family) out << ',' << f.id << ':' << f.name;
  out << '\n';
  for (size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != family.size()) {
      throw std::invalid_argument("moment vector length differs from family");
    }
    out << r;
    for (double v : vectors[r].values) out << ',' << format_real(v);
    out << '\n';
  }
}

std::vector<std::vector<double>> read_moment_csv(std::istream& in) {
  std::string line;
  if (!next_record(in, line)) throw std::runtime_error("empty moment CSV");
  const size_t width = split_csv(line).size();
  if (width < 2) throw std::runtime_error("moment CSV header has no motifs");
  std::vector<std::vector<double>> rows;
  while (next_record(in, line)) {
    const auto fields = split_csv(line);
    if (fields.size() != width) {
      throw std::runtime_error("moment CSV row " +
                               std::to_string(rows.size() + 1) +
                               " has wrong field count");
    }
    std::vector<double> row;
    for (size_t i = 1; i < fields.size(); ++i) row.push_back(parse_real(fields[i]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gmix
