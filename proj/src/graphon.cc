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

#include "gmix/graphon.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "gmix/csv.h"

namespace gmix {

StepGraphon::StepGraphon(int resolution, std::vector<double> values)
    : resolution_(resolution), values_(std::move(values)) {
  if (resolution < 1) throw std::invalid_argument("step graphon resolution < 1");
  if (values_.size() != static_cast<size_t>(resolution) * resolution) {
    throw std::invalid_argument("step graphon needs r*r values");
  }
}

int StepGraphon::cell_index(double x) const {
  const int i = static_cast<int>(std::floor(x * resolution_));
  return std::clamp(i, 0, resolution_ - 1);
}

double StepGraphon::mean() const {
  double s = 0;
  for (double v : values_) s += v;
  return values_.empty() ? 0.0 : s / static_cast<double>(values_.size());
}

void write_step_graphon(std::ostream& out, const StepGraphon& w) {
  const int r = w.resolution();
  out << r << '\n';
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (j) out << ' ';
      out << format_real(w.cell(i, j));
    }
    out << '\n';
  }
}

StepGraphon read_step_graphon(std::istream& in) {
  std::string line;
  if (!next_record(in, line)) throw std::runtime_error("empty step graphon file");
  const long long r = parse_integer(line);
  if (r < 1) throw std::runtime_error("step graphon resolution must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<size_t>(r * r));
  for (long long i = 0; i < r; ++i) {
    if (!next_record(in, line)) {
      throw std::runtime_error("step graphon has fewer than r rows");
    }
    std::istringstream row(line);
    std::string tok;
    long long cols = 0;
    while (row >> tok) {
      values.push_back(parse_real(tok));
      ++cols;
    }
    if (cols != r) {
      throw std::runtime_error("step graphon row " + std::to_string(i + 1) +
                               " has " + std::to_string(cols) + " values");
    }
  }
  return StepGraphon(static_cast<int>(r), std::move(values));
}

namespace {

struct Analytic {
  std::string name;
  Graphon::Kernel kernel;
};

struct Mixture {
  double lambda;
  Graphon first;
  Graphon second;
};

}  // namespace

struct Graphon::Node {
  std::variant<Analytic, StepGraphon, Mixture> v;
};

Graphon::Graphon() : Graphon(constant(0.0)) {}

Graphon::Graphon(StepGraphon step)
    : node_(std::make_shared<const Node>(Node{std::move(step)})) {}

Graphon Graphon::analytic(std::string name, Kernel kernel) {
  return Graphon(std::make_shared<const Node>(
      Node{Analytic{std::move(name), std::move(kernel)}}));
}

Graphon Graphon::constant(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("constant graphon value outside [0, 1]");
  }
  return analytic("const(" + format_real(c) + ")",
                  [c](double, double) { return c; });
}

Graphon Graphon::mix(const Graphon& w1, const Graphon& w2, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("mixing weight outside [0, 1]");
  }
  return Graphon(std::make_shared<const Node>(Node{Mixture{lambda, w1, w2}}));
}

double Graphon::operator()(double x, double y) const {
  struct Eval {
    double x, y;
    double operator()(const Analytic& a) const { return a.kernel(x, y); }
    double operator()(const StepGraphon& s) const { return s(x, y); }
    double operator()(const Mixture& m) const {
      return m.lambda * m.first(x, y) + (1.0 - m.lambda) * m.second(x, y);
    }
  };
  return std::visit(Eval{x, y}, node_->v);
}

std::string Graphon::describe() const {
  struct Describe {
    std::string operator()(const Analytic& a) const { return a.name; }
    std::string operator()(const StepGraphon& s) const {
      return "step(r=" + std::to_string(s.resolution()) + ")";
    }
    std::string operator()(const Mixture& m) const {
      return "mix(" + format_real(m.lambda) + ", " + m.first.describe() +
             ", " + m.second.describe() + ")";
    }
  };
  return std::visit(Describe{}, node_->v);
}

Graphon ground_truth_graphon(int index) {
  switch (index) {
    case 0:
      return Graphon::analytic("xy", [](double x, double y) { return x * y; });
    case 1:
      return Graphon::analytic("exp(-(x^0.7+y^0.7))", [](double x, double y) {
        return std::exp(-(std::pow(x, 0.7) + std::pow(y, 0.7)));
      });
    case 2:
      return Graphon::analytic(
          "(x^2+y^2+sqrt(x)+sqrt(y))/4", [](double x, double y) {
            return 0.25 * ((x * x + y * y) + (std::sqrt(x) + std::sqrt(y)));
          });
    case 3:
      return Graphon::analytic("(x+y)/2",
                               [](double x, double y) { return 0.5 * (x + y); });
    case 4:
      return Graphon::analytic("1/(1+exp(-2(x^2+y^2)))", [](double x, double y) {
        return 1.0 / (1.0 + std::exp(-2.0 * (x * x + y * y)));
      });
    case 5:
      return Graphon::analytic(
          "1/(1+exp(-max^2-min^4))", [](double x, double y) {
            const double hi = std::max(x, y), lo = std::min(x, y);
            return 1.0 / (1.0 + std::exp(-hi * hi - lo * lo * lo * lo));
          });
    case 6:
      return Graphon::analytic("exp(-max^0.75)", [](double x, double y) {
        return std::exp(-std::pow(std::max(x, y), 0.75));
      });
  }
  throw std::out_of_range("ground-truth graphon index must be in 0..6, got " +
                          std::to_string(index));
}

Graph sample_edges(const Graphon& w, std::span<const double> latents, Rng& rng) {
  const int n = static_cast<int>(latents.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < w(latents[i], latents[j])) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

SampledGraph sample_graph(const Graphon& w, int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_graph needs n >= 1");
  Rng rng(seed);
  SampledGraph out;
  out.latents.values.resize(static_cast<size_t>(n));
  for (double& x : out.latents.values) x = rng.uniform();
  out.graph = sample_edges(w, out.latents.values, rng);
  return out;
}

namespace {

HomDensity quadrature(const Graphon& w, const Motif& f, int grid) {
  const int k = f.vertex_count;
  if (k > 4) {
    throw std::invalid_argument(
        "quadrature is limited to motifs with at most 4 vertices; use "
        "Monte Carlo");
  }
  if (grid < 1) throw std::invalid_argument("quadrature grid must be >= 1");
  const size_t g = static_cast<size_t>(grid);
  std::vector<double> table(g * g);
  for (size_t a = 0; a < g; ++a) {
    for (size_t b = 0; b < g; ++b) {
      table[a * g + b] = w((a + 0.5) / grid, (b + 0.5) / grid);
    }
  }
  std::vector<size_t> idx(k, 0);
  double sum = 0.0;
  while (true) {
    double prod = 1.0;
    for (auto [u, v] : f.edges) prod *= table[idx[u] * g + idx[v]];
    sum += prod;
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == g) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return {sum / std::pow(static_cast<double>(grid), k), 0.0};
}

HomDensity monte_carlo(const Graphon& w, const Motif& f, const MonteCarlo& mc) {
  if (mc.samples < 2) throw std::invalid_argument("Monte Carlo needs >= 2 samples");
  Rng rng(mc.seed);
  std::vector<double> x(static_cast<size_t>(f.vertex_count));
  double mean = 0.0, m2 = 0.0;
  for (int64_t s = 0; s < mc.samples; ++s) {
    for (double& xi : x) xi = rng.uniform();
    double prod = 1.0;
    for (auto [u, v] : f.edges) prod *= w(x[u], x[v]);
    // Welford update.
    const double delta = prod - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (prod - mean);
  }
  const double var = m2 / static_cast<double>(mc.samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(mc.samples))};
}

}  // namespace

HomDensity hom_density(const Graphon& w, const Motif& f, const HomMethod& method) {
  if (const auto* q = std::get_if<Quadrature>(&method)) {
    return quadrature(w, f, q->grid);
  }
  return monte_carlo(w, f, std::get<MonteCarlo>(method));
}

MomentVector theoretical_moment_vector(const Graphon& w,
                                       std::span<const Motif> family,
                                       const TheoryOptions& options) {
  MomentVector mv;
  mv.values.reserve(family.size());
  mv.degenerate.assign(family.size(), false);
  for (const Motif& f : family) {
    HomDensity d;
    if (f.vertex_count <= 3) {
      d = hom_density(w, f, Quadrature{options.grid_small});
    } else if (f.vertex_count == 4) {
      d = hom_density(w, f, Quadrature{options.grid_large});
    } else {
      d = hom_density(
          w, f,
          MonteCarlo{options.mc_samples,
                     derive_seed(options.mc_seed, static_cast<uint64_t>(f.id))});
    }
    mv.values.push_back(d.value);
  }
  return mv;
}

}  // namespace gmix
