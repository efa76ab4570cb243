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

#ifndef GMIX_CONTRASTIVE_H_
#define GMIX_CONTRASTIVE_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gmix {

struct EmbeddingBatch {
  std::vector<std::vector<double>> anchors;    // z_t
  std::vector<std::vector<double>> positives;  // augmented views
  std::vector<int> clusters;
  std::vector<int> classes;  // optional; empty when absent
  double tau = 0.5;

  size_t size() const { return anchors.size(); }
  // Throws std::invalid_argument on length mismatch, zero vectors or tau <= 0.
  void validate() const;
};

double cosine_similarity(std::span<const double> a, std::span<const double> b);

struct AnchorLoss {
  double loss = 0.0;
  bool skipped = false;  // no negative from another cluster
};

struct InfoNceResult {
  std::vector<AnchorLoss> anchors;
  std::optional<double> mean_loss;  // empty for a degenerate batch
  int skipped = 0;

  bool degenerate() const { return !mean_loss.has_value(); }
};

// Cluster-restricted InfoNCE: the denominator of anchor t sums over the
// positives of anchors in other clusters only. Anchors without such
// negatives are skipped and excluded from the mean.
InfoNceResult model_aware_infonce(const EmbeddingBatch& batch);

struct AnchorBound {
  bool skipped = false;
  int negatives = 0;  // m_t
  // ln m_t + mean_k theta(z_t, z~_k) - theta(z_t, z~_t), theta = sim / tau.
  double bound = 0.0;
  // ln m_t + theta(z_t, centroid of negatives) - theta(z_t, z~_t); reported
  // for inspection, not guaranteed to be a lower bound.
  double centroid_form = 0.0;
};

std::vector<AnchorBound> loss_lower_bound(const EmbeddingBatch& batch);

struct LabeledBatch {
  std::vector<int> classes;
  std::vector<int> clusters;
};

enum class NegativeMode { kBaseline, kModelAware };

// True-negative to false-negative ratio: per anchor |TN| / max(1, |FN|) over
// its negative set, averaged over anchors, then over batches.
double tfr(std::span<const LabeledBatch> batches, NegativeMode mode);

// CSV with header; columns graph_index, cluster, optional class, then F
// columns of z and F columns of the positive view.
EmbeddingBatch read_embedding_batch(std::istream& in, double tau);

}  // namespace gmix

#endif  // GMIX_CONTRASTIVE_H_
