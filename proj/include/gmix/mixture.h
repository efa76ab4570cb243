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

#ifndef GMIX_MIXTURE_H_
#define GMIX_MIXTURE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "gmix/graph.h"
#include "gmix/graphon.h"
#include "gmix/kmeans.h"
#include "gmix/motif.h"

namespace gmix {

// K = max(1, ceil(ln T)).
int default_cluster_count(int64_t dataset_size);

// Nodes ranked by descending degree (ties by node id); rank p maps to
// (p + 0.5) / n.
LatentPositions degree_rank_latents(const Graph& g);

struct StepEstimate {
  StepGraphon graphon;
  std::vector<LatentPositions> latents;  // one per input graph
};

// Degree-sorted histogram estimator: every graph's sorted adjacency
// (diagonal excluded) is average-pooled onto an r x r grid, the per-graph
// grids are averaged cell-wise over the graphs that reach that cell, and the
// result is symmetrised and clamped to [0, 1]. Cells no graph reaches (n < r)
// take the pooled edge density.
StepEstimate estimate_step_graphon(std::span<const Graph> graphs, int resolution);

struct PhiOptions {
  std::optional<int> clusters;  // default_cluster_count(T) when unset
  int refinement_size = 10;     // L
  int resolution = 30;
  uint64_t seed = 0;
  int max_iters = 300;
  int restarts = 10;
  int max_k = 4;  // motif family
};

struct MixtureModel {
  std::vector<StepGraphon> graphons;
  std::vector<int> assignment;  // graph -> cluster in [0, K)
  std::vector<LatentPositions> latents;
  std::vector<Point> centroids;
  std::vector<std::vector<int>> representatives;  // per cluster, graph indices
  std::vector<MomentVector> moments;

  int cluster_count() const { return static_cast<int>(graphons.size()); }
};

// Moment-space mixture estimation: motif moment vectors, k-means, nearest-
// centroid assignment, and a step graphon per cluster fitted on the
// min(L, |C_k|) members nearest the centroid.
MixtureModel phi(std::span<const Graph> dataset, const PhiOptions& options = {});

// Same, with moment vectors supplied by the caller (one per graph).
MixtureModel phi(std::span<const Graph> dataset,
                 std::vector<MomentVector> moments, const PhiOptions& options);

// Nearest ground-truth vector per point (Euclidean, ties to lowest index).
std::vector<int> theory_assign(std::span<const Point> vectors,
                               std::span<const Point> ground_truth);

// Directory layout: graphon_<k>.txt per cluster, assignment.csv
// (graph_index,cluster,latents with ';' separators) and centroids.csv.
void write_mixture_model(const std::filesystem::path& dir, const MixtureModel& m);

// Reads graphons, assignment and latents back (centroids included;
// representatives and moments are not stored).
MixtureModel read_mixture_model(const std::filesystem::path& dir);

}  // namespace gmix

#endif  // GMIX_MIXTURE_H_
