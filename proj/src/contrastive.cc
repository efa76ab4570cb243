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

#include "gmix/contrastive.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>

#include "gmix/csv.h"

namespace gmix {

void EmbeddingBatch::validate() const {
  const size_t l = anchors.size();
  if (positives.size() != l || clusters.size() != l) {
    throw std::invalid_argument("embedding batch arrays differ in length");
  }
  if (!classes.empty() && classes.size() != l) {
    throw std::invalid_argument("class labels differ in length from the batch");
  }
  if (!(tau > 0.0)) throw std::invalid_argument("temperature must be positive");
  for (size_t t = 0; t < l; ++t) {
    if (anchors[t].size() != anchors[0].size() ||
        positives[t].size() != anchors[0].size()) {
      throw std::invalid_argument("embedding dimensions differ");
    }
    const auto zero = [](const std::vector<double>& v) {
      return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    };
    if (zero(anchors[t]) || zero(positives[t])) {
      throw std::invalid_argument("zero embedding vector at row " + std::to_string(t));
    }
  }
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

InfoNceResult model_aware_infonce(const EmbeddingBatch& batch) {
  batch.validate();
  const size_t l = batch.size();
  InfoNceResult r;
  r.anchors.resize(l);
  double total = 0.0;
  int used = 0;
  std::vector<double> scores;
  for (size_t t = 0; t < l; ++t) {
    scores.clear();
    for (size_t k = 0; k < l; ++k) {
      if (batch.clusters[k] == batch.clusters[t]) continue;
      scores.push_back(cosine_similarity(batch.anchors[t], batch.positives[k]) / batch.tau);
    }
    if (scores.empty()) {
      r.anchors[t].skipped = true;
      ++r.skipped;
      continue;
    }
    const double top = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    for (double s : scores) sum += std::exp(s - top);
    const double positive =
        cosine_similarity(batch.anchors[t], batch.positives[t]) / batch.tau;
    r.anchors[t].loss = top + std::log(sum) - positive;
    total += r.anchors[t].loss;
    ++used;
  }
  if (used > 0) r.mean_loss = total / used;
  return r;
}

std::vector<AnchorBound> loss_lower_bound(const EmbeddingBatch& batch) {
  batch.validate();
  const size_t l = batch.size();
  const size_t dim = l ? batch.anchors[0].size() : 0;
  std::vector<AnchorBound> out(l);
  for (size_t t = 0; t < l; ++t) {
    double mean_theta = 0.0;
    std::vector<double> centroid(dim, 0.0);
    int m = 0;
    for (size_t k = 0; k < l; ++k) {
      if (batch.clusters[k] == batch.clusters[t]) continue;
      mean_theta += cosine_similarity(batch.anchors[t], batch.positives[k]) / batch.tau;
      for (size_t d = 0; d < dim; ++d) centroid[d] += batch.positives[k][d];
      ++m;
    }
    out[t].negatives = m;
    if (m == 0) {
      out[t].skipped = true;
      continue;
    }
    mean_theta /= m;
    for (double& c : centroid) c /= m;
    const double positive =
        cosine_similarity(batch.anchors[t], batch.positives[t]) / batch.tau;
    out[t].bound = std::log(static_cast<double>(m)) + mean_theta - positive;
    const bool null_centroid =
        std::all_of(centroid.begin(), centroid.end(), [](double x) { return x == 0.0; });
    out[t].centroid_form =
        null_centroid ? std::numeric_limits<double>::quiet_NaN()
                      : std::log(static_cast<double>(m)) +
                            cosine_similarity(batch.anchors[t], centroid) / batch.tau -
                            positive;
  }
  return out;
}

double tfr(std::span<const LabeledBatch> batches, NegativeMode mode) {
  if (batches.empty()) throw std::invalid_argument("TFR needs at least one batch");
  double total = 0.0;
  for (const LabeledBatch& b : batches) {
    const size_t l = b.classes.size();
    if (l == 0) throw std::invalid_argument("TFR batch is empty");
    if (b.clusters.size() != l) throw std::invalid_argument("TFR labels and clusters differ in length");
    double batch_sum = 0.0;
    for (size_t i = 0; i < l; ++i) {
      int tn = 0, fn = 0;
      for (size_t k = 0; k < l; ++k) {
        if (k == i) continue;
        if (mode == NegativeMode::kModelAware && b.clusters[k] == b.clusters[i]) continue;
        if (b.classes[k] == b.classes[i]) {
          ++fn;
        } else {
          ++tn;
        }
      }
      batch_sum += static_cast<double>(tn) / std::max(1, fn);
    }
    total += batch_sum / static_cast<double>(l);
  }
  return total / static_cast<double>(batches.size());
}

EmbeddingBatch read_embedding_batch(std::istream& in, double tau) {
  std::string line;
  if (!next_record(in, line)) throw std::runtime_error("empty embedding file");
  const auto header = split_csv(line);
  if (header.size() < 4 || header[0] != "graph_index" || header[1] != "cluster") {
    throw std::runtime_error("embedding header must start with graph_index,cluster");
  }
  const bool has_class = header[2] == "class";
  const size_t first = has_class ? 3 : 2;
  const size_t rest = header.size() - first;
  if (rest == 0 || rest % 2 != 0) {
    throw std::runtime_error("embedding file needs F anchor and F positive columns");
  }
  const size_t dim = rest / 2;
  EmbeddingBatch b;
  b.tau = tau;
  int row = 0;
  while (next_record(in, line)) {
    ++row;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      throw std::runtime_error("embedding row " + std::to_string(row) + " has " +
                               std::to_string(f.size()) + " fields, expected " +
                               std::to_string(header.size()));
    }
    b.clusters.push_back(static_cast<int>(parse_integer(f[1])));
    if (has_class) b.classes.push_back(static_cast<int>(parse_integer(f[2])));
    std::vector<double> z(dim), p(dim);
    for (size_t d = 0; d < dim; ++d) {
      z[d] = parse_real(f[first + d]);
      p[d] = parse_real(f[first + dim + d]);
    }
    b.anchors.push_back(std::move(z));
    b.positives.push_back(std::move(p));
  }
  b.validate();
  return b;
}

}  // namespace gmix
