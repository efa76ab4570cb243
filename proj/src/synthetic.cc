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

#include "gmix/synthetic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gmix/csv.h"
#include "gmix/graphon.h"
#include "gmix/mixture.h"
#include "gmix/rng.h"

namespace gmix {

namespace {

// Minimum-cost perfect matching on a square matrix (rows to columns).
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), way_min(n + 1);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(way_min.begin(), way_min.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < way_min[j]) {
          way_min[j] = cur;
          way[j] = j0;
        }
        if (way_min[j] < delta) {
          delta = way_min[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          way_min[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n);
  for (int j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

std::vector<int> compact_ids(std::span<const int> ids, int& distinct) {
  std::map<int, int> index;
  for (int x : ids) index.emplace(x, 0);
  int next = 0;
  for (auto& [key, val] : index) val = next++;
  distinct = next;
  std::vector<int> out;
  out.reserve(ids.size());
  for (int x : ids) out.push_back(index[x]);
  return out;
}

std::vector<Point> prefix_points(std::span<const MomentVector> moments, size_t p) {
  std::vector<Point> pts;
  pts.reserve(moments.size());
  for (const MomentVector& m : moments) {
    pts.emplace_back(m.values.begin(), m.values.begin() + static_cast<long>(p));
  }
  return pts;
}

double direct_accuracy(std::span<const int> predicted, std::span<const int> truth) {
  size_t hits = 0;
  for (size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i];
  return truth.empty() ? 0.0 : static_cast<double>(hits) / truth.size();
}

std::vector<Point> reference_vectors(std::span<const Motif> family,
                                     const SynthConfig& config) {
  std::vector<Point> refs;
  TheoryOptions opts;
  opts.mc_samples = config.theory_mc_samples;
  for (int c = 0; c < kGroundTruthCount; ++c) {
    opts.mc_seed = derive_seed(config.seed, 0x7e0fULL + static_cast<uint64_t>(c));
    refs.push_back(theoretical_moment_vector(ground_truth_graphon(c), family, opts).values);
  }
  return refs;
}

uint64_t kmeans_seed(uint64_t seed) { return derive_seed(seed, 0x6b6d65616e73ULL); }

}  // namespace

double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("clustering_accuracy: length mismatch");
  }
  if (truth.empty()) return 0.0;
  int kp = 0, kt = 0;
  const std::vector<int> p = compact_ids(predicted, kp);
  const std::vector<int> t = compact_ids(truth, kt);
  const int s = std::max(kp, kt);
  std::vector<std::vector<int>> table(s, std::vector<int>(s, 0));
  for (size_t i = 0; i < p.size(); ++i) ++table[p[i]][t[i]];

  int best = 0;
  if (s <= 8) {
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int agree = 0;
      for (int r = 0; r < s; ++r) agree += table[r][perm[r]];
      best = std::max(best, agree);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<std::vector<double>> cost(s, std::vector<double>(s));
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c) cost[r][c] = -table[r][c];
    const std::vector<int> match = hungarian(cost);
    for (int r = 0; r < s; ++r) best += table[r][match[r]];
  }
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

SizeMode parse_size_mode(const std::string& s) {
  if (s == "varying") return SizeMode::kVarying;
  if (s == "fixed") return SizeMode::kFixed;
  throw std::invalid_argument("size mode must be 'varying' or 'fixed', got '" + s + "'");
}

const char* to_string(SizeMode m) {
  return m == SizeMode::kVarying ? "varying" : "fixed";
}

void SynthConfig::validate() const {
  if (graphs_per_class < 1) throw std::invalid_argument("graphs per class must be >= 1");
  if (clusters < 1) throw std::invalid_argument("cluster count must be >= 1");
  if (clusters > graphs_per_class * kGroundTruthCount) {
    throw std::invalid_argument("more clusters than graphs");
  }
  if (max_k != 4 && max_k != 5) throw std::invalid_argument("motif max_k must be 4 or 5");
  if (min_nodes < 1 || max_nodes < min_nodes || fixed_nodes < 1) {
    throw std::invalid_argument("invalid node count range");
  }
}

SynthDataset make_synthetic_dataset(const SynthConfig& config,
                                    std::span<const Motif> family) {
  config.validate();
  SynthDataset d;
  const size_t total = static_cast<size_t>(config.graphs_per_class) * kGroundTruthCount;
  d.truth.reserve(total);
  d.node_counts.reserve(total);
  d.moments.reserve(total);
  uint64_t index = 0;
  for (int c = 0; c < kGroundTruthCount; ++c) {
    const Graphon w = ground_truth_graphon(c);
    for (int i = 0; i < config.graphs_per_class; ++i, ++index) {
      const uint64_t s = derive_seed(config.seed, index);
      int n = config.fixed_nodes;
      if (config.size_mode == SizeMode::kVarying) {
        Rng size_rng(derive_seed(s, 1));
        n = static_cast<int>(size_rng.between(config.min_nodes, config.max_nodes));
      }
      const SampledGraph sg = sample_graph(w, n, derive_seed(s, 2));
      d.truth.push_back(c);
      d.node_counts.push_back(n);
      d.moments.push_back(moment_vector(sg.graph, family));
    }
  }
  return d;
}

SynthReport run_synthetic(const SynthConfig& config) {
  config.validate();
  SynthReport r;
  r.family = motif_family(config.max_k);
  r.data = make_synthetic_dataset(config, r.family);
  r.reference_vectors = reference_vectors(r.family, config);

  const std::vector<Point> pts = prefix_points(r.data.moments, r.family.size());
  const KMeansResult km = kmeans(pts, config.clusters, config.kmeans_max_iters,
                                 kmeans_seed(config.seed), config.kmeans_restarts);
  const std::vector<int> theory = theory_assign(pts, r.reference_vectors);
  r.mbc_accuracy = clustering_accuracy(km.assignment, r.data.truth);
  r.theory_accuracy = direct_accuracy(theory, r.data.truth);

  r.mbc_confusion.assign(kGroundTruthCount, std::vector<int>(config.clusters, 0));
  r.theory_confusion.assign(kGroundTruthCount, std::vector<int>(kGroundTruthCount, 0));
  double dist = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const int truth = r.data.truth[i];
    ++r.mbc_confusion[truth][km.assignment[i]];
    ++r.theory_confusion[truth][theory[i]];
    dist += std::sqrt(squared_distance(pts[i], r.reference_vectors[truth]));
  }
  r.mean_truth_distance = dist / static_cast<double>(pts.size());
  return r;
}

void write_synth_report(std::ostream& out, const SynthConfig& config,
                        const SynthReport& report) {
  auto matrix = [&out](const std::vector<std::vector<int>>& m) {
    out << '[';
    for (size_t i = 0; i < m.size(); ++i) {
      out << (i ? ", [" : "[");
      for (size_t j = 0; j < m[i].size(); ++j) out << (j ? ", " : "") << m[i][j];
      out << ']';
    }
    out << ']';
  };
  out << "{\n";
  out << "  \"mode\": \"" << to_string(config.size_mode) << "\",\n";
  out << "  \"graphs_per_class\": " << config.graphs_per_class << ",\n";
  out << "  \"seed\": " << config.seed << ",\n";
  out << "  \"clusters\": " << config.clusters << ",\n";
  out << "  \"motifs\": " << report.family.size() << ",\n";
  out << "  \"mbc_accuracy\": " << format_real(report.mbc_accuracy) << ",\n";
  out << "  \"theory_accuracy\": " << format_real(report.theory_accuracy) << ",\n";
  out << "  \"mean_truth_distance\": " << format_real(report.mean_truth_distance) << ",\n";
  out << "  \"mbc_confusion\": ";
  matrix(report.mbc_confusion);
  out << ",\n  \"theory_confusion\": ";
  matrix(report.theory_confusion);
  out << "\n}\n";
}

std::vector<AblationRow> run_motif_ablation(const SynthConfig& config, int max_motifs) {
  config.validate();
  if (max_motifs < 1 || max_motifs > 30) {
    throw std::invalid_argument("ablation supports 1..30 motifs");
  }
  std::vector<Motif> family = motif_family(max_motifs > 9 ? 5 : 4);
  family.resize(static_cast<size_t>(max_motifs));
  const SynthDataset data = make_synthetic_dataset(config, family);
  const std::vector<Point> refs = reference_vectors(family, config);

  std::vector<AblationRow> rows;
  for (int p = 1; p <= max_motifs; ++p) {
    const std::vector<Point> pts = prefix_points(data.moments, static_cast<size_t>(p));
    std::vector<Point> ref_prefix;
    for (const Point& v : refs) ref_prefix.emplace_back(v.begin(), v.begin() + p);
    const KMeansResult km = kmeans(pts, config.clusters, config.kmeans_max_iters,
                                   kmeans_seed(config.seed), config.kmeans_restarts);
    AblationRow row;
    row.motifs_used = p;
    row.mbc_accuracy = clustering_accuracy(km.assignment, data.truth);
    row.theory_accuracy = direct_accuracy(theory_assign(pts, ref_prefix), data.truth);
    rows.push_back(row);
  }
  return rows;
}

void write_ablation_csv(std::ostream& out, std::span<const AblationRow> rows) {
  out << "motifs_used,mbc_accuracy,theory_accuracy\n";
  for (const AblationRow& r : rows) {
    out << r.motifs_used << ',' << format_real(r.mbc_accuracy) << ','
        << format_real(r.theory_accuracy) << '\n';
  }
}

}  // namespace gmix
