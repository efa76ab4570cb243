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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gmix/bounds.h"
#include "gmix/graphon.h"
#include "gmix/motif.h"
#include "test_util.h"

namespace gmix {
namespace {

TEST(GroundTruth, SpotValues) {
  EXPECT_DOUBLE_EQ(ground_truth_graphon(0)(0.5, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(ground_truth_graphon(3)(0.2, 0.6), 0.4);
  EXPECT_DOUBLE_EQ(ground_truth_graphon(1)(0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ground_truth_graphon(6)(0.0, 1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(ground_truth_graphon(4)(0.0, 0.0), 0.5);
  EXPECT_THROW(ground_truth_graphon(7), std::out_of_range);
}

std::vector<Graphon> every_kind() {
  std::vector<Graphon> out;
  for (int i = 0; i < kGroundTruthCount; ++i) out.push_back(ground_truth_graphon(i));
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> u(0, 1);
  const int r = 7;
  std::vector<double> cells(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) cells[i * r + j] = cells[j * r + i] = u(gen);
  out.push_back(StepGraphon(r, cells));
  out.push_back(Graphon::constant(0.3));
  out.push_back(mix(out[0], out[7], 0.35));
  return out;
}

TEST(Graphon, SymmetricAndInRange) {
  std::mt19937 gen(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (const Graphon& w : every_kind()) {
    for (int t = 0; t < 10000; ++t) {
      const double x = u(gen), y = u(gen);
      const double v = w(x, y);
      EXPECT_EQ(v, w(y, x)) << w.describe();
      EXPECT_GE(v, -1e-12);
      EXPECT_LE(v, 1.0 + 1e-12);
    }
  }
}

TEST(StepGraphon, HalfOpenCellsWithClosedEnd) {
  const StepGraphon s(4, std::vector<double>(16, 0.0));
  EXPECT_EQ(s.cell_index(0.0), 0);
  EXPECT_EQ(s.cell_index(0.25), 1);
  EXPECT_EQ(s.cell_index(0.2499999), 0);
  EXPECT_EQ(s.cell_index(1.0), 3);
  EXPECT_THROW(StepGraphon(3, std::vector<double>(8)), std::invalid_argument);
}

TEST(StepGraphon, TextRoundTrip) {
  std::vector<double> v = {0.1, 0.2, 0.2, 1.0 / 3.0};
  const StepGraphon s(2, v);
  std::stringstream io;
  write_step_graphon(io, s);
  const StepGraphon back = read_step_graphon(io);
  EXPECT_EQ(back.resolution(), 2);
  EXPECT_EQ(back.values(), v);
}

TEST(Mix, EndpointsAndMidpoint) {
  const Graphon a = ground_truth_graphon(2), b = ground_truth_graphon(5);
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    const double x = u(gen), y = u(gen);
    EXPECT_EQ(mix(a, b, 1.0)(x, y), a(x, y));
    EXPECT_EQ(mix(a, b, 0.0)(x, y), b(x, y));
    const double lam = u(gen);
    const double v = mix(a, b, lam)(x, y);
    EXPECT_GE(v, std::min(a(x, y), b(x, y)) - 1e-15);
    EXPECT_LE(v, std::max(a(x, y), b(x, y)) + 1e-15);
  }
  EXPECT_DOUBLE_EQ(mix(Graphon::constant(0.2), Graphon::constant(0.8), 0.5)(0.3, 0.9), 0.5);
  EXPECT_THROW(mix(a, b, 1.5), std::invalid_argument);
  EXPECT_THROW(mix(a, b, -0.1), std::invalid_argument);
}

TEST(Sampling, ConstantGraphons) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(sample_graph(Graphon::constant(1.0), 10, seed).graph, testing::complete(10));
    EXPECT_EQ(sample_graph(Graphon::constant(0.0), 10, seed).graph.edge_count(), 0);
  }
}

TEST(Sampling, HalfDensityConcentrates) {
  const auto s = sample_graph(Graphon::constant(0.5), 1000, 42);
  const double density = 2.0 * s.graph.edge_count() / (1000.0 * 999.0);
  EXPECT_NEAR(density, 0.5, 0.01);
}

TEST(Sampling, LatentsAreTheFirstDraws) {
  const auto s = sample_graph(ground_truth_graphon(0), 30, 77);
  Rng rng(77);
  ASSERT_EQ(s.latents.size(), 30u);
  for (double x : s.latents.values) EXPECT_EQ(x, rng.uniform());
  // The remaining draws decide the pairs in lexicographic order.
  const Graph again = sample_edges(ground_truth_graphon(0), s.latents.values, rng);
  EXPECT_EQ(again, s.graph);
}

TEST(Sampling, SameSeedSameGraph) {
  const Graphon w = ground_truth_graphon(4);
  EXPECT_EQ(sample_graph(w, 120, 9).graph, sample_graph(w, 120, 9).graph);
  EXPECT_NE(sample_graph(w, 120, 9).graph, sample_graph(w, 120, 10).graph);
}

TEST(HomDensity, ClosedFormsForXy) {
  const auto fam = motif_family(4);
  const Graphon xy = ground_truth_graphon(0);
  // edge: (1/2)^2; path3: E[x] E[y^2] E[z] = 1/12; triangle: (1/3)^3.
  EXPECT_NEAR(hom_density(xy, fam[0], Quadrature{}).value, 0.25, 1e-12);
  EXPECT_NEAR(hom_density(xy, fam[1], Quadrature{}).value, 1.0 / 12.0, 1e-4);
  EXPECT_NEAR(hom_density(xy, fam[2], Quadrature{}).value, 1.0 / 27.0, 1e-4);
  // clique4: each vertex has degree 3, (E[x^3])^4 = 1/256.
  EXPECT_NEAR(hom_density(xy, fam[8], Quadrature{24}).value, 1.0 / 256.0, 1e-3);
}

TEST(HomDensity, ConstantsGiveEdgePowers) {
  for (const Motif& f : motif_family(4)) {
    EXPECT_NEAR(hom_density(Graphon::constant(0.6), f, Quadrature{8}).value,
                std::pow(0.6, f.edge_count()), 1e-12);
  }
}

TEST(HomDensity, QuadratureRejectsFiveNodes) {
  EXPECT_THROW(hom_density(Graphon::constant(0.5), motif_family(5)[9], Quadrature{}),
               std::invalid_argument);
}

// Independent Monte-Carlo oracle written here, not the library's.
double mc_oracle(const Graphon& w, const Motif& f, int64_t samples, double& se) {
  std::mt19937_64 gen(123456789);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double mean = 0, m2 = 0;
  std::vector<double> x(f.vertex_count);
  for (int64_t s = 1; s <= samples; ++s) {
    for (double& v : x) v = u(gen);
    double prod = 1.0;
    for (auto [a, b] : f.edges) prod *= w(x[a], x[b]);
    const double d = prod - mean;
    mean += d / static_cast<double>(s);
    m2 += d * (prod - mean);
  }
  se = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return mean;
}

TEST(HomDensity, QuadratureAgreesWithMonteCarloOracle) {
  const auto fam = motif_family(4);
  const Graphon xy = ground_truth_graphon(0);
  const MomentVector theory = theoretical_moment_vector(xy, fam);
  for (int i = 0; i < 3; ++i) {
    double se = 0;
    const double mc = mc_oracle(xy, fam[i], 10'000'000, se);
    EXPECT_LE(std::abs(theory.values[i] - mc), 3 * se) << fam[i].name;
  }
}

TEST(HomDensity, LibraryMonteCarloReportsStandardError) {
  const Motif tri = motif_family(4)[2];
  const HomDensity h = hom_density(ground_truth_graphon(3), tri, MonteCarlo{200000, 5});
  const double q = hom_density(ground_truth_graphon(3), tri, Quadrature{}).value;
  EXPECT_GT(h.std_error, 0.0);
  EXPECT_LE(std::abs(h.value - q), 4 * h.std_error);
}

TEST(TheoryVector, ConstantEndpoints) {
  const auto fam = motif_family(4);
  for (double v : theoretical_moment_vector(Graphon::constant(0.0), fam).values) EXPECT_EQ(v, 0.0);
  for (double v : theoretical_moment_vector(Graphon::constant(1.0), fam).values)
    EXPECT_NEAR(v, 1.0, 1e-12);
}

// Empirical vectors of n=400 samples sit within the two-stage sampling term
// (eta = 0.01) of the graphon's vector in at least 98 of 100 draws.
TEST(TheoryVector, SamplingConsistency) {
  const auto fam = motif_family(4);
  const Graphon w = ground_truth_graphon(0);
  const MomentVector theory = theoretical_moment_vector(w, fam);
  int inside = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const MomentVector mv = moment_vector(sample_graph(w, 400, seed).graph, fam);
    bool ok = true;
    for (const Motif& f : fam) {
      const double term =
          sampling_error({.n = 400, .k = f.vertex_count, .e = f.edge_count(), .eta = 0.01}).total;
      ok = ok && std::abs(mv.values[f.id] - theory.values[f.id]) <= term;
    }
    inside += ok;
  }
  EXPECT_GE(inside, 98);
}

}  // namespace
}  // namespace gmix
