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

#ifndef GMIX_AUGMENT_H_
#define GMIX_AUGMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "gmix/graph.h"
#include "gmix/graphon.h"
#include "gmix/mixture.h"

namespace gmix {

// A generated graph with its soft label lambda e_i + (1 - lambda) e_j.
struct MixedSample {
  Graph graph;
  std::vector<double> soft_label;  // length C, 0-based class positions
  int class_i = 0;                 // 1-based, weighted by lambda
  int class_j = 0;                 // 1-based, weighted by 1 - lambda
  double lambda = 0.0;
};

struct GmamOptions {
  double ratio = 0.2;               // M = ceil(ratio * T)
  std::optional<int> target_nodes;  // default: rounded mean node count
  int refinement_size = 10;
  int resolution = 30;
  uint64_t seed = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.2;
  std::optional<double> fixed_lambda;  // overrides the sampler when set
};

struct GmamResult {
  std::vector<MixedSample> samples;
  std::vector<MixtureModel> class_models;  // index c - 1 for class c
};

// Mixture-aware mixup. Each class gets its own mixture model; every sample
// draws an ordered class pair i != j, one graph from each, mixes the two
// cluster graphons and samples a fresh graph from the mix. Sample m uses the
// seed derive_seed(seed, m).
GmamResult gmam(const LabeledDataset& dataset, const GmamOptions& options);

// Resamples exactly round(rate_percent / 100 * n(n-1)/2) node pairs, chosen
// uniformly without replacement, from Bernoulli(w(eta_i, eta_j)); every other
// pair keeps its state. Pairs are visited in lexicographic order, each
// consuming one uniform for selection and, when selected, one for the edge.
Graph graphon_augment(const Graph& g, const Graphon& w,
                      const LatentPositions& latents, double rate_percent,
                      uint64_t seed);

// <dir>/sample_<m>.edges plus manifest.csv with columns
// file,lambda,class_i,class_j,y_1..y_C.
void write_augmented_set(const std::filesystem::path& dir,
                         const std::vector<MixedSample>& samples);

}  // namespace gmix

#endif  // GMIX_AUGMENT_H_
