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

#include "gmix/kmeans.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "gmix/rng.h"

namespace gmix {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

int nearest(std::span<const double> p, std::span<const Point> centroids) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(p, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

namespace {

std::vector<Point> plus_plus_seeds(std::span<const Point> points, int k, Rng& rng) {
  const size_t n = points.size();
  std::vector<Point> centers;
  centers.push_back(points[rng.below(n)]);
  std::vector<double> d2(n);
  for (size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centers[0]);
  while (static_cast<int>(centers.size()) < k) {
    double total = 0.0;
    for (double d : d2) total += d;
    size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = rng.below(n);
    }
    centers.push_back(points[pick]);
    for (size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points[i], centers.back()));
    }
  }
  return centers;
}

class Lloyd {
 public:
  Lloyd(std::span<const Point> points, int k) : points_(points), k_(k) {}

  KMeansResult run(std::vector<Point> centers, int max_iters) {
    KMeansResult r;
    r.centroids = std::move(centers);
    r.assignment.assign(points_.size(), -1);
    assign(r);
    for (int it = 0; it < max_iters; ++it) {
      update(r);
      ++r.iterations;
      if (!assign(r)) break;
    }
    return r;
  }

 private:
  // Returns true when any assignment changed.
  bool assign(KMeansResult& r) const {
    bool changed = false;
    double inertia = 0.0;
    for (size_t i = 0; i < points_.size(); ++i) {
      const int c = nearest(points_[i], r.centroids);
      changed |= c != r.assignment[i];
      r.assignment[i] = c;
      inertia += squared_distance(points_[i], r.centroids[c]);
    }
    r.inertia = inertia;
    r.inertia_history.push_back(inertia);
    return changed;
  }

  void update(KMeansResult& r) const {
    std::vector<int> sizes(k_, 0);
    for (int c : r.assignment) ++sizes[c];
    for (int c = 0; c < k_; ++c) {
      if (sizes[c] > 0) continue;
      // Move the worst-served point out of a cluster that can spare it.
      size_t far = 0;
      double far_d = -1.0;
      for (size_t i = 0; i < points_.size(); ++i) {
        if (sizes[r.assignment[i]] < 2) continue;
        const double d = squared_distance(points_[i], r.centroids[r.assignment[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --sizes[r.assignment[far]];
      r.assignment[far] = c;
      sizes[c] = 1;
    }
    const size_t dim = points_.empty() ? 0 : points_[0].size();
    std::vector<Point> sums(k_, Point(dim, 0.0));
    for (size_t i = 0; i < points_.size(); ++i) {
      Point& s = sums[r.assignment[i]];
      for (size_t d = 0; d < dim; ++d) s[d] += points_[i][d];
    }
    for (int c = 0; c < k_; ++c) {
      for (size_t d = 0; d < dim; ++d) sums[c][d] /= sizes[c];
    }
    r.centroids = std::move(sums);
  }

  std::span<const Point> points_;
  int k_;
};

}  // namespace

KMeansResult kmeans(std::span<const Point> points, int k, int max_iters,
                    uint64_t seed, int restarts) {
  if (k < 1) throw std::invalid_argument("k-means needs k >= 1");
  if (static_cast<size_t>(k) > points.size()) {
    throw std::invalid_argument("k-means with k = " + std::to_string(k) +
                                " but only " + std::to_string(points.size()) +
                                " points");
  }
  for (const Point& p : points) {
    if (p.size() != points[0].size()) {
      throw std::invalid_argument("k-means points differ in dimension");
    }
  }
  if (restarts < 1) restarts = 1;
  KMeansResult best;
  bool have = false;
  for (int run = 0; run < restarts; ++run) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(run)));
    Lloyd lloyd(points, k);
    KMeansResult r = lloyd.run(plus_plus_seeds(points, k, rng), max_iters);
    if (!have || r.inertia < best.inertia) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

}  // namespace gmix
