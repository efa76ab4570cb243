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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "gmix/bounds.h"
#include "gmix/graphon.h"
#include "gmix/motif.h"

namespace gmix {
namespace {

// Closed forms evaluated in long double as an independent reference.
long double vertex_ref(int n, int k, long double eta) {
  const long double m = n / k;
  return std::sqrt(std::log(4.0L / eta) / (2.0L * m));
}
long double edge_ref(int n, int e, long double eta) {
  return e * std::sqrt(2.0L * std::log(4.0L / eta) / (static_cast<long double>(n) * (n - 1)));
}
long double classical_ref(int n, int k, long double eta) {
  return 2.0L * k * std::sqrt(std::log(2.0L / eta) / n);
}

TEST(SamplingError, WorkedExample) {
  const SamplingError s = sampling_error({.n = 200, .k = 3, .e = 3, .eta = 0.05});
  EXPECT_NEAR(s.vertex, 0.18220, 5e-6);
  EXPECT_NEAR(s.edge, 0.044518, 5e-6);
  EXPECT_NEAR(s.total, 0.22672, 5e-6);
  EXPECT_NEAR(s.vertex, static_cast<double>(vertex_ref(200, 3, 0.05L)), 1e-14);
  EXPECT_NEAR(s.edge, static_cast<double>(edge_ref(200, 3, 0.05L)), 1e-14);
}

TEST(SamplingError, AgreesWithReferenceOnGrid) {
  for (int n = 5; n <= 2000; n += 65)
    for (int k = 2; k <= 5; ++k)
      for (int e = 1; e <= k * (k - 1) / 2; ++e)
        for (double eta : {0.01, 0.05, 0.3}) {
          const SamplingError s = sampling_error({.n = n, .k = k, .e = e, .eta = eta});
          EXPECT_NEAR(s.total,
                      static_cast<double>(vertex_ref(n, k, eta) + edge_ref(n, e, eta)), 1e-13);
          EXPECT_TRUE(std::isfinite(s.total));
          EXPECT_GT(s.total, 0.0);
        }
}

TEST(SamplingError, LargerEtaIsSmaller) {
  EXPECT_LT(sampling_error({.n = 200, .k = 3, .e = 3, .eta = 0.5}).total,
            sampling_error({.n = 200, .k = 3, .e = 3, .eta = 0.05}).total);
}

TEST(SamplingError, DoublingNShrinksVertexTerm) {
  for (int k = 2; k <= 5; ++k) {
    const int n = 60 * k;
    const double a = sampling_error({.n = n, .k = k, .e = 1}).vertex;
    const double b = sampling_error({.n = 2 * n, .k = k, .e = 1}).vertex;
    EXPECT_NEAR(b / a, 1.0 / std::sqrt(2.0), 1e-12);
  }
}

TEST(SamplingError, RejectsInvalidSpecs) {
  EXPECT_THROW(sampling_error({.n = 2, .k = 3, .e = 1}), std::invalid_argument);
  EXPECT_THROW(sampling_error({.n = 10, .k = 1, .e = 1}), std::invalid_argument);
  EXPECT_THROW(sampling_error({.n = 10, .k = 3, .e = 0}), std::invalid_argument);
  EXPECT_THROW(sampling_error({.n = 10, .k = 3, .e = 1, .eta = 1.0}), std::invalid_argument);
  EXPECT_THROW(total_moment_bound({.n = 10, .k = 3, .e = 1, .epsilon = -0.1}),
               std::invalid_argument);
}

TEST(Classical, WorkedExample) {
  EXPECT_NEAR(classical_sampling_error(200, 3, 0.05), 0.81487, 1e-4);
  EXPECT_NEAR(classical_sampling_error(200, 3, 0.05),
              static_cast<double>(classical_ref(200, 3, 0.05L)), 1e-14);
}

TEST(TotalBound, Examples) {
  const BoundSpec s{.n = 200, .k = 3, .e = 3, .eta = 0.05};
  EXPECT_EQ(total_moment_bound(s), 2.0 * sampling_error(s).total);
  BoundSpec far = s;
  far.epsilon = 0.1;
  EXPECT_NEAR(total_moment_bound(far), 0.75344, 1e-5);
}

std::vector<int> default_grid() {
  std::vector<int> ns;
  for (int n = 50; n <= 1000; n += 50) ns.push_back(n);
  return ns;
}

TEST(Comparison, NovelUniformlyTighter) {
  const auto fam = motif_family(4);
  const BoundTable t = bound_comparison(default_grid(), fam, 0.05);
  ASSERT_EQ(t.rows.size(), 9u * 20u);
  for (const BoundRow& r : t.rows) {
    EXPECT_LT(r.novel, r.classical) << r.motif_id << " n=" << r.n;
    EXPECT_NEAR(r.classical, 2 * static_cast<double>(classical_ref(r.n, r.k, 0.05L)), 1e-13);
  }
}

// The gap widens with motif size at large n for every 4-node motif, and over
// the whole grid for the sparse ones. Dense 4-node motifs carry more edge
// noise at small n, so their worst-case ratio can dip below the edge's.
TEST(Comparison, GapGrowsWithMotifSize) {
  const auto fam = motif_family(4);
  const BoundTable t = bound_comparison(default_grid(), fam, 0.05);
  auto ratio_at = [&](int id, int n) {
    for (const BoundRow& r : t.rows)
      if (r.motif_id == id && r.n == n) return r.classical / r.novel;
    return 0.0;
  };
  for (const Motif& f : fam) {
    if (f.vertex_count != 4) continue;
    EXPECT_GT(ratio_at(f.id, 1000), ratio_at(0, 1000)) << f.name;
    if (f.edge_count() <= 4) EXPECT_GT(t.min_ratio[f.id], t.min_ratio[0]) << f.name;
  }
}

TEST(Comparison, CsvColumns) {
  const auto fam = motif_family(4);
  const int ns[] = {50, 100};
  std::ostringstream out;
  write_bound_csv(out, bound_comparison(ns, fam, 0.05));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "motif_id,k,e,n,novel,classical");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 18);
}

// Coverage on xy, whose triangle density is exactly 1/27.
TEST(Coverage, TriangleErrorRarelyExceedsBound) {
  const Motif tri = motif_family(4)[2];
  const double delta = sampling_error({.n = 200, .k = 3, .e = 3, .eta = 0.05}).total;
  int exceed = 0;
  const int trials = 300;
  for (int s = 0; s < trials; ++s) {
    const Graph g = sample_graph(ground_truth_graphon(0), 200, derive_seed(2024, s)).graph;
    exceed += std::abs(empirical_density(g, tri) - 1.0 / 27.0) > delta;
  }
  EXPECT_LE(exceed, trials / 20);
}

}  // namespace
}  // namespace gmix
