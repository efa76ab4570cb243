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

#ifndef GMIX_KMEANS_H_
#define GMIX_KMEANS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace gmix {

using Point = std::vector<double>;

struct KMeansResult {
  std::vector<Point> centroids;
  // assignment[i] is the nearest centroid of point i (ties to lowest id).
  std::vector<int> assignment;
  double inertia = 0.0;
  int iterations = 0;
  // Inertia after every assignment step of the returned run.
  std::vector<double> inertia_history;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

// Index of the nearest centroid, ties resolved to the lowest index.
int nearest(std::span<const double> p, std::span<const Point> centroids);

// Lloyd's algorithm with k-means++ seeding. Empty clusters take the point
// farthest from its centroid. With restarts > 1 the run of lowest inertia is
// kept; run r is seeded with derive_seed(seed, r).
// Throws std::invalid_argument unless 1 <= k <= points.size().
KMeansResult kmeans(std::span<const Point> points, int k, int max_iters,
                    uint64_t seed, int restarts = 1);

}  // namespace gmix

#endif  // GMIX_KMEANS_H_
