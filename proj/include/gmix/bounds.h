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

#ifndef GMIX_BOUNDS_H_
#define GMIX_BOUNDS_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "gmix/motif.h"

namespace gmix {

// Concentration of motif densities for an n-node W-random graph and a motif
// with k vertices and e edges. All logarithms are natural.
struct BoundSpec {
  int n = 0;
  int k = 0;
  int e = 0;
  double eta = 0.05;     // failure probability, in (0, 1)
  double epsilon = 0.0;  // cut distance between the two graphons, >= 0

  // Throws std::invalid_argument unless n >= k >= 2, e >= 1, 0 < eta < 1,
  // epsilon >= 0.
  void validate() const;
};

struct SamplingError {
  double vertex = 0.0;  // sqrt(log(4/eta) / (2m)), m = floor(n/k)
  double edge = 0.0;    // e / sqrt(n(n-1)) * sqrt(2 log(4/eta))
  double total = 0.0;   // vertex + edge, holds w.p. >= 1 - eta per graph
};

// Two-stage (vertex noise, then edge noise) sampling error.
SamplingError sampling_error(const BoundSpec& spec);

// Single-stage McDiarmid bound 2k sqrt(log(2/eta) / n).
double classical_sampling_error(int n, int k, double eta);

// e * epsilon + 2 * total sampling error: bound on |t(F,G1) - t(F,G2)| for
// graphs drawn from graphons at cut distance <= epsilon, w.p. >= 1 - 2 eta.
double total_moment_bound(const BoundSpec& spec);

struct BoundRow {
  int motif_id = 0;
  int k = 0;
  int e = 0;
  int n = 0;
  double novel = 0.0;      // 2 * two-stage error
  double classical = 0.0;  // 2 * single-stage error
};

struct BoundTable {
  std::vector<BoundRow> rows;
  // Per motif (family order): min over n of classical / novel.
  std::vector<double> min_ratio;
};

BoundTable bound_comparison(std::span<const int> n_values,
                            std::span<const Motif> family, double eta);

// Columns motif_id,k,e,n,novel,classical.
void write_bound_csv(std::ostream& out, const BoundTable& table);

}  // namespace gmix

#endif  // GMIX_BOUNDS_H_
