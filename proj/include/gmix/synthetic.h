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

#ifndef GMIX_SYNTHETIC_H_
#define GMIX_SYNTHETIC_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gmix/kmeans.h"
#include "gmix/motif.h"

namespace gmix {

// Best agreement over one-to-one matchings of predicted ids to truth ids:
// exhaustive for up to 8 labels, Hungarian assignment above that.
double clustering_accuracy(std::span<const int> predicted, std::span<const int> truth);

enum class SizeMode { kVarying, kFixed };

SizeMode parse_size_mode(const std::string& s);
const char* to_string(SizeMode m);

struct SynthConfig {
  int graphs_per_class = 50;
  SizeMode size_mode = SizeMode::kVarying;
  uint64_t seed = 0;
  int clusters = 7;
  int max_k = 4;
  int min_nodes = 75;    // varying mode, inclusive
  int max_nodes = 300;   // varying mode, inclusive
  int fixed_nodes = 200;
  int kmeans_restarts = 10;
  int kmeans_max_iters = 300;
  int64_t theory_mc_samples = 200'000;  // 5-node motifs only

  void validate() const;
};

// Dataset drawn from the seven reference graphons, class-major order.
struct SynthDataset {
  std::vector<int> truth;       // graphon index per graph
  std::vector<int> node_counts;
  std::vector<MomentVector> moments;
};

SynthDataset make_synthetic_dataset(const SynthConfig& config,
                                    std::span<const Motif> family);

struct SynthReport {
  double mbc_accuracy = 0.0;
  double theory_accuracy = 0.0;
  // confusion[truth][cluster] for the k-means partition (raw cluster ids).
  std::vector<std::vector<int>> mbc_confusion;
  // confusion[truth][nearest reference graphon].
  std::vector<std::vector<int>> theory_confusion;
  // Mean Euclidean distance from each moment vector to its generator's
  // theoretical vector.
  double mean_truth_distance = 0.0;
  std::vector<Point> reference_vectors;
  SynthDataset data;
  std::vector<Motif> family;
};

SynthReport run_synthetic(const SynthConfig& config);

void write_synth_report(std::ostream& out, const SynthConfig& config,
                        const SynthReport& report);

struct AblationRow {
  int motifs_used = 0;
  double mbc_accuracy = 0.0;
  double theory_accuracy = 0.0;
};

// Accuracy when clustering on the first p motifs of the 30-motif family, for
// p = 1..max_motifs.
std::vector<AblationRow> run_motif_ablation(const SynthConfig& config, int max_motifs);

void write_ablation_csv(std::ostream& out, std::span<const AblationRow> rows);

}  // namespace gmix

#endif  // GMIX_SYNTHETIC_H_
