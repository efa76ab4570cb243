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

#include "gmix/augment.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "gmix/csv.h"
#include "gmix/rng.h"

namespace gmix {

GmamResult gmam(const LabeledDataset& dataset, const GmamOptions& options) {
  dataset.validate();
  if (!dataset.labeled()) throw std::invalid_argument("mixup needs a labeled dataset");
  const int classes = dataset.class_count;
  if (classes < 2) throw std::invalid_argument("mixup needs at least two classes");
  if (!(options.ratio > 0.0 && options.ratio <= 1.0)) {
    throw std::invalid_argument("augmentation ratio must be in (0, 1]");
  }
  if (options.fixed_lambda &&
      !(*options.fixed_lambda >= 0.0 && *options.fixed_lambda <= 1.0)) {
    throw std::invalid_argument("fixed lambda outside [0, 1]");
  }
  if (!(options.lambda_min >= 0.0 && options.lambda_min <= options.lambda_max &&
        options.lambda_max <= 1.0)) {
    throw std::invalid_argument("lambda range must satisfy 0 <= min <= max <= 1");
  }

  std::vector<std::vector<int>> members(static_cast<size_t>(classes));
  for (size_t t = 0; t < dataset.graphs.size(); ++t) {
    members[dataset.labels[t] - 1].push_back(static_cast<int>(t));
  }
  for (int c = 0; c < classes; ++c) {
    if (members[c].empty()) {
      throw std::invalid_argument("class " + std::to_string(c + 1) + " has no graphs");
    }
  }

  GmamResult result;
  for (int c = 0; c < classes; ++c) {
    std::vector<Graph> subset;
    for (int t : members[c]) subset.push_back(dataset.graphs[t]);
    PhiOptions po;
    po.refinement_size = options.refinement_size;
    po.resolution = options.resolution;
    po.seed = derive_seed(options.seed, 0x636c617373ULL + static_cast<uint64_t>(c));
    result.class_models.push_back(phi(subset, po));
  }

  int n = 0;
  if (options.target_nodes) {
    n = *options.target_nodes;
  } else {
    double total = 0.0;
    for (const Graph& g : dataset.graphs) total += g.node_count();
    n = static_cast<int>(std::lround(total / static_cast<double>(dataset.graphs.size())));
  }
  if (n < 1) throw std::invalid_argument("target node count must be >= 1");

  const int64_t t = static_cast<int64_t>(dataset.graphs.size());
  // The epsilon keeps products such as 0.2 * 100 that land a hair above an
  // integer from rounding up.
  const int64_t m_total =
      static_cast<int64_t>(std::ceil(options.ratio * static_cast<double>(t) - 1e-9));
  result.samples.reserve(static_cast<size_t>(m_total));
  for (int64_t m = 0; m < m_total; ++m) {
    Rng rng(derive_seed(options.seed, static_cast<uint64_t>(m)));
    const int i = static_cast<int>(rng.below(static_cast<uint64_t>(classes)));
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(classes - 1)));
    if (j >= i) ++j;
    const int a = members[i][rng.below(members[i].size())];
    const int b = members[j][rng.below(members[j].size())];
    const double lambda = options.fixed_lambda
                              ? *options.fixed_lambda
                              : rng.uniform(options.lambda_min, options.lambda_max);
    // Positions of a and b inside their class subsets.
    const auto pos = [&](int cls, int graph) {
      const auto& v = members[cls];
      return static_cast<size_t>(std::find(v.begin(), v.end(), graph) - v.begin());
    };
    const MixtureModel& mi = result.class_models[i];
    const MixtureModel& mj = result.class_models[j];
    const Graphon wa = mi.graphons[mi.assignment[pos(i, a)]];
    const Graphon wb = mj.graphons[mj.assignment[pos(j, b)]];
    const Graphon mixed = Graphon::mix(wa, wb, lambda);

    std::vector<double> latents(static_cast<size_t>(n));
    for (double& u : latents) u = rng.uniform();

    MixedSample s;
    s.graph = sample_edges(mixed, latents, rng);
    s.soft_label.assign(static_cast<size_t>(classes), 0.0);
    s.soft_label[i] += lambda;
    s.soft_label[j] += 1.0 - lambda;
    s.class_i = i + 1;
    s.class_j = j + 1;
    s.lambda = lambda;
    result.samples.push_back(std::move(s));
  }
  return result;
}

Graph graphon_augment(const Graph& g, const Graphon& w,
                      const LatentPositions& latents, double rate_percent,
                      uint64_t seed) {
  const int n = g.node_count();
  if (latents.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("latent positions do not match node count");
  }
  if (!(rate_percent >= 0.0 && rate_percent <= 100.0)) {
    throw std::invalid_argument("rate must be a percentage in [0, 100]");
  }
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
  int64_t needed = std::llround(rate_percent / 100.0 * static_cast<double>(pairs));
  needed = std::min(needed, pairs);

  // Selection sampling: pair number p is taken with probability
  // needed_left / pairs_left, which yields a uniform subset of exact size.
  Rng rng(seed);
  std::vector<Edge> edges;
  int64_t remaining = pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --remaining) {
      bool on = g.adjacent(i, j);
      if (needed > 0 &&
          rng.uniform() * static_cast<double>(remaining) < static_cast<double>(needed)) {
        --needed;
        on = rng.uniform() < w(latents.values[i], latents.values[j]);
      }
      if (on) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

void write_augmented_set(const std::filesystem::path& dir,
                         const std::vector<MixedSample>& samples) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.csv", std::ios::binary);
  const size_t classes = samples.empty() ? 0 : samples[0].soft_label.size();
  manifest << "file,lambda,class_i,class_j";
  for (size_t c = 0; c < classes; ++c) manifest << ",y_" << c + 1;
  manifest << '\n';
  for (size_t m = 0; m < samples.size(); ++m) {
    const std::string file = "sample_" + std::to_string(m) + ".edges";
    write_edge_list_file(dir / file, samples[m].graph);
    manifest << file << ',' << format_real(samples[m].lambda) << ','
             << samples[m].class_i << ',' << samples[m].class_j;
    for (double y : samples[m].soft_label) manifest << ',' << format_real(y);
    manifest << '\n';
  }
}

}  // namespace gmix
