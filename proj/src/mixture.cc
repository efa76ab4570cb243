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

#include "gmix/mixture.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "gmix/csv.h"

namespace gmix {

int default_cluster_count(int64_t dataset_size) {
  if (dataset_size < 1) throw std::invalid_argument("dataset size must be >= 1");
  const int k = static_cast<int>(std::ceil(std::log(static_cast<double>(dataset_size))));
  return std::max(1, k);
}

namespace {

std::vector<int> degree_order(const Graph& g) {
  const std::vector<int> deg = degree_sequence(g);
  std::vector<int> order(deg.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  return order;
}

}  // namespace

LatentPositions degree_rank_latents(const Graph& g) {
  const std::vector<int> order = degree_order(g);
  const double n = static_cast<double>(g.node_count());
  LatentPositions lp;
  lp.values.resize(order.size());
  for (size_t p = 0; p < order.size(); ++p) lp.values[order[p]] = (p + 0.5) / n;
  return lp;
}

StepEstimate estimate_step_graphon(std::span<const Graph> graphs, int resolution) {
  if (graphs.empty()) throw std::invalid_argument("cannot estimate a graphon from no graphs");
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  const size_t r = static_cast<size_t>(resolution);
  std::vector<double> mean_sum(r * r, 0.0);
  std::vector<int> mean_count(r * r, 0);
  double pooled_edges = 0.0, pooled_pairs = 0.0;

  StepEstimate out;
  out.latents.reserve(graphs.size());
  std::vector<double> sums(r * r);
  std::vector<int64_t> counts(r * r);
  for (const Graph& g : graphs) {
    const int n = g.node_count();
    const std::vector<int> order = degree_order(g);
    LatentPositions lp;
    lp.values.resize(static_cast<size_t>(n));
    std::vector<size_t> cell(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
      const double eta = (p + 0.5) / n;
      lp.values[order[p]] = eta;
      cell[p] = std::min(static_cast<size_t>(eta * resolution), r - 1);
    }
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        const size_t c = cell[p] * r + cell[q];
        sums[c] += g.adjacent(order[p], order[q]) ? 1.0 : 0.0;
        ++counts[c];
      }
    }
    for (size_t c = 0; c < r * r; ++c) {
      if (counts[c] == 0) continue;
      mean_sum[c] += sums[c] / static_cast<double>(counts[c]);
      ++mean_count[c];
    }
    pooled_edges += 2.0 * static_cast<double>(g.edge_count());
    pooled_pairs += static_cast<double>(n) * (n - 1);
    out.latents.push_back(std::move(lp));
  }

  const double fill = pooled_pairs > 0 ? pooled_edges / pooled_pairs : 0.0;
  std::vector<double> values(r * r);
  for (size_t c = 0; c < r * r; ++c) {
    values[c] = mean_count[c] > 0 ? mean_sum[c] / mean_count[c] : fill;
  }
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = i; j < r; ++j) {
      const double s = std::clamp(0.5 * (values[i * r + j] + values[j * r + i]), 0.0, 1.0);
      values[i * r + j] = s;
      values[j * r + i] = s;
    }
  }
  out.graphon = StepGraphon(resolution, std::move(values));
  return out;
}

MixtureModel phi(std::span<const Graph> dataset, const PhiOptions& options) {
  const std::vector<Motif> family = motif_family(options.max_k);
  std::vector<MomentVector> moments;
  moments.reserve(dataset.size());
  for (const Graph& g : dataset) moments.push_back(moment_vector(g, family));
  return phi(dataset, std::move(moments), options);
}

MixtureModel phi(std::span<const Graph> dataset, std::vector<MomentVector> moments,
                 const PhiOptions& options) {
  const size_t t = dataset.size();
  if (t == 0) throw std::invalid_argument("phi needs a nonempty dataset");
  if (moments.size() != t) throw std::invalid_argument("one moment vector per graph required");
  if (options.refinement_size < 1) throw std::invalid_argument("refinement size L must be >= 1");
  const int k = options.clusters.value_or(default_cluster_count(static_cast<int64_t>(t)));

  // Canonical order by content so the result does not depend on how the
  // dataset happens to be listed.
  std::vector<uint64_t> keys(t);
  for (size_t i = 0; i < t; ++i) keys[i] = graph_key(dataset[i]);
  std::vector<size_t> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::tie(moments[a].values, keys[a]) < std::tie(moments[b].values, keys[b]);
  });
  std::vector<Point> points;
  points.reserve(t);
  for (size_t i : order) points.push_back(moments[i].values);

  const KMeansResult km = kmeans(points, k, options.max_iters, options.seed, options.restarts);

  MixtureModel m;
  m.centroids = km.centroids;
  m.assignment.resize(t);
  for (size_t i = 0; i < t; ++i) m.assignment[i] = nearest(moments[i].values, m.centroids);

  m.graphons.resize(static_cast<size_t>(k));
  m.representatives.resize(static_cast<size_t>(k));
  m.latents.resize(t);
  for (int c = 0; c < k; ++c) {
    std::vector<size_t> members;
    for (size_t i : order) {
      if (m.assignment[i] == c) members.push_back(i);
    }
    // A cluster left empty by an iteration cap borrows the graphs nearest
    // its centroid.
    if (members.empty()) members = order;
    std::vector<double> dist(t);
    for (size_t i : members) dist[i] = squared_distance(moments[i].values, m.centroids[c]);
    std::stable_sort(members.begin(), members.end(),
                     [&](size_t a, size_t b) { return dist[a] < dist[b]; });
    members.resize(std::min(members.size(), static_cast<size_t>(options.refinement_size)));
    std::vector<Graph> subset;
    for (size_t i : members) {
      subset.push_back(dataset[i]);
      m.representatives[c].push_back(static_cast<int>(i));
    }
    m.graphons[c] = estimate_step_graphon(subset, options.resolution).graphon;
  }
  for (size_t i = 0; i < t; ++i) m.latents[i] = degree_rank_latents(dataset[i]);
  m.moments = std::move(moments);
  return m;
}

std::vector<int> theory_assign(std::span<const Point> vectors,
                               std::span<const Point> ground_truth) {
  if (vectors.empty() || ground_truth.empty()) {
    throw std::invalid_argument("theory_assign needs nonempty inputs");
  }
  for (const Point& g : ground_truth) {
    if (g.size() != vectors[0].size()) throw std::invalid_argument("dimension mismatch");
  }
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const Point& v : vectors) {
    if (v.size() != ground_truth[0].size()) throw std::invalid_argument("dimension mismatch");
    out.push_back(nearest(v, ground_truth));
  }
  return out;
}

void write_mixture_model(const std::filesystem::path& dir, const MixtureModel& m) {
  std::filesystem::create_directories(dir);
  for (int c = 0; c < m.cluster_count(); ++c) {
    std::ofstream out(dir / ("graphon_" + std::to_string(c) + ".txt"), std::ios::binary);
    write_step_graphon(out, m.graphons[c]);
  }
  {
    std::ofstream out(dir / "assignment.csv", std::ios::binary);
    out << "graph_index,cluster,latents\n";
    for (size_t i = 0; i < m.assignment.size(); ++i) {
      out << i << ',' << m.assignment[i] << ',';
      const auto& lv = m.latents[i].values;
      for (size_t j = 0; j < lv.size(); ++j) {
        if (j) out << ';';
        out << format_real(lv[j]);
      }
      out << '\n';
    }
  }
  std::ofstream out(dir / "centroids.csv", std::ios::binary);
  out << "cluster";
  const size_t dim = m.centroids.empty() ? 0 : m.centroids[0].size();
  for (size_t d = 0; d < dim; ++d) out << ",m" << d;
  out << '\n';
  for (size_t c = 0; c < m.centroids.size(); ++c) {
    out << c;
    for (double v : m.centroids[c]) out << ',' << format_real(v);
    out << '\n';
  }
}

MixtureModel read_mixture_model(const std::filesystem::path& dir) {
  MixtureModel m;
  for (int c = 0;; ++c) {
    const auto p = dir / ("graphon_" + std::to_string(c) + ".txt");
    if (!std::filesystem::exists(p)) break;
    std::ifstream in(p);
    m.graphons.push_back(read_step_graphon(in));
  }
  if (m.graphons.empty()) throw std::runtime_error("no graphon_0.txt in " + dir.string());
  std::ifstream in(dir / "assignment.csv");
  if (!in) throw std::runtime_error("missing assignment.csv in " + dir.string());
  std::string line;
  next_record(in, line);  // header
  while (next_record(in, line)) {
    const auto f = split_csv(line);
    if (f.size() != 3) throw std::runtime_error("bad assignment row: " + line);
    const long long cluster = parse_integer(f[1]);
    if (cluster < 0 || cluster >= m.cluster_count()) {
      throw std::runtime_error("assignment references unknown cluster");
    }
    m.assignment.push_back(static_cast<int>(cluster));
    LatentPositions lp;
    size_t start = 0;
    const std::string& s = f[2];
    while (start < s.size()) {
      size_t end = s.find(';', start);
      if (end == std::string::npos) end = s.size();
      lp.values.push_back(parse_real(std::string_view(s).substr(start, end - start)));
      start = end + 1;
    }
    m.latents.push_back(std::move(lp));
  }
  std::ifstream cin_(dir / "centroids.csv");
  if (cin_ && next_record(cin_, line)) {
    while (next_record(cin_, line)) {
      const auto f = split_csv(line);
      Point p;
      for (size_t i = 1; i < f.size(); ++i) p.push_back(parse_real(f[i]));
      m.centroids.push_back(std::move(p));
    }
  }
  return m;
}

}  // namespace gmix
