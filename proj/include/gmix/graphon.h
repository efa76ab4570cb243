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

#ifndef GMIX_GRAPHON_H_
#define GMIX_GRAPHON_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gmix/graph.h"
#include "gmix/motif.h"
#include "gmix/rng.h"

namespace gmix {

// Piecewise-constant graphon on an r x r grid. Cell i covers [i/r, (i+1)/r),
// with the last cell closed at 1.
class StepGraphon {
 public:
  StepGraphon() = default;
  // values is row-major r*r.
  StepGraphon(int resolution, std::vector<double> values);

  int resolution() const { return resolution_; }
  double cell(int i, int j) const {
    return values_[static_cast<size_t>(i) * resolution_ + j];
  }
  const std::vector<double>& values() const { return values_; }
  double operator()(double x, double y) const {
    return cell(cell_index(x), cell_index(y));
  }
  double mean() const;
  int cell_index(double x) const;

 private:
  int resolution_ = 0;
  std::vector<double> values_;
};

// Text matrix: first line r, then r rows of r space-separated decimals.
void write_step_graphon(std::ostream& out, const StepGraphon& w);
StepGraphon read_step_graphon(std::istream& in);

// Symmetric kernel [0,1]^2 -> [0,1]: a closed form, a step function, or a
// convex combination of two graphons. Cheap to copy; the representation is
// shared and immutable.
class Graphon {
 public:
  using Kernel = std::function<double(double, double)>;

  Graphon();  // the zero graphon
  Graphon(StepGraphon step);  // NOLINT: implicit by intent
  static Graphon analytic(std::string name, Kernel kernel);
  static Graphon constant(double c);
  // lambda * w1 + (1 - lambda) * w2. Throws if lambda is outside [0, 1].
  static Graphon mix(const Graphon& w1, const Graphon& w2, double lambda);

  double operator()(double x, double y) const;
  std::string describe() const;

 private:
  struct Node;
  explicit Graphon(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Graphon mix(const Graphon& w1, const Graphon& w2, double lambda) {
  return Graphon::mix(w1, w2, lambda);
}

inline constexpr int kGroundTruthCount = 7;

// The seven reference graphons of the synthetic benchmark:
//   0: xy                       1: exp(-(x^0.7 + y^0.7))
//   2: (x^2 + y^2 + sqrt x + sqrt y) / 4
//   3: (x + y) / 2              4: 1 / (1 + exp(-2 (x^2 + y^2)))
//   5: 1 / (1 + exp(-max^2 - min^4))
//   6: exp(-max^0.75)
Graphon ground_truth_graphon(int index);

struct LatentPositions {
  std::vector<double> values;
  size_t size() const { return values.size(); }
};

struct SampledGraph {
  Graph graph;
  LatentPositions latents;
};

// W-random graph. Draw order: n uniform latents, then one uniform per pair
// (i < j) in lexicographic order; the pair is an edge iff u < w(x_i, x_j).
SampledGraph sample_graph(const Graphon& w, int n, uint64_t seed);

// Draws the edges for fixed latents, consuming one uniform per pair.
Graph sample_edges(const Graphon& w, std::span<const double> latents, Rng& rng);

struct Quadrature {
  int grid = 64;  // midpoints per axis
};
struct MonteCarlo {
  int64_t samples = 1'000'000;
  uint64_t seed = 0;
};
using HomMethod = std::variant<Quadrature, MonteCarlo>;

struct HomDensity {
  double value = 0.0;
  double std_error = 0.0;  // zero for quadrature
};

// t(F, W) = integral over [0,1]^k of prod_{ij in E(F)} W(x_i, x_j).
// Quadrature is limited to k <= 4.
HomDensity hom_density(const Graphon& w, const Motif& f, const HomMethod& method);

struct TheoryOptions {
  int grid_small = 64;   // k <= 3
  int grid_large = 24;   // k == 4
  int64_t mc_samples = 1'000'000;  // k == 5
  uint64_t mc_seed = 0;
};

// Quadrature for k <= 4, Monte Carlo (seeded per motif) for k == 5.
MomentVector theoretical_moment_vector(const Graphon& w,
                                       std::span<const Motif> family,
                                       const TheoryOptions& options = {});

}  // namespace gmix

#endif  // GMIX_GRAPHON_H_
