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

// Acceptance run: one PASS/FAIL line per headline criterion, with the
// tolerances fixed below. Exits nonzero if any criterion fails, except those
// listed in kKnownShortfalls, which still print FAIL but are documented in
// the README as not reproduced.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gmix/augment.h"
#include "gmix/bounds.h"
#include "gmix/contrastive.h"
#include "gmix/graphon.h"
#include "gmix/mixture.h"
#include "gmix/motif.h"
#include "gmix/synthetic.h"

namespace fs = std::filesystem;
using namespace gmix;

namespace {

const std::set<std::string> kKnownShortfalls = {"synthetic_clustering"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// --- oracle equivalence ---------------------------------------------------

Outcome oracle_equivalence() {
  const auto fam = motif_family(4);
  std::mt19937 gen(424242);
  std::uniform_int_distribution<int> size(1, 12);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double p = 0.1 * (1 + trial % 9);
    const int n = size(gen);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(gen)) e.emplace_back(i, j);
    const Graph g = Graph::from_edges(n, e);
    for (const Motif& f : fam)
      worst = std::max(worst, std::abs(empirical_density(g, f) - brute_force_density(g, f)));
  }
  return {worst <= 1e-12, "max |fast - brute| = " + fmt("%.3g", worst) + " (limit 1e-12)"};
}

// --- synthetic clustering table -------------------------------------------

Outcome synthetic_clustering() {
  struct Target {
    SizeMode mode;
    double mbc, theory;
  };
  const Target targets[] = {{SizeMode::kVarying, 80.0, 81.4}, {SizeMode::kFixed, 79.3, 82.9}};
  bool pass = true;
  std::string detail;
  double distance[2] = {0, 0};
  for (int m = 0; m < 2; ++m) {
    double mbc = 0, theory = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      SynthConfig c;
      c.graphs_per_class = 50;
      c.size_mode = targets[m].mode;
      c.seed = seed;
      const SynthReport r = run_synthetic(c);
      mbc += 100.0 * r.mbc_accuracy / 10;
      theory += 100.0 * r.theory_accuracy / 10;
      distance[m] += r.mean_truth_distance / 10;
    }
    const bool mbc_ok = std::abs(mbc - targets[m].mbc) <= 5.0;
    const bool theory_ok = std::abs(theory - targets[m].theory) <= 5.0;
    pass = pass && mbc_ok && theory_ok;
    detail += std::string(to_string(targets[m].mode)) + ": MBC " + fmt("%.1f", mbc) + " vs " +
              fmt("%.1f", targets[m].mbc) + (mbc_ok ? " ok" : " OUT") + ", Theory " +
              fmt("%.1f", theory) + " vs " + fmt("%.1f", targets[m].theory) +
              (theory_ok ? " ok" : " OUT") + "; ";
  }
  const bool tighter = distance[1] < distance[0];
  pass = pass && tighter;
  detail += "mean distance to truth fixed " + fmt("%.4f", distance[1]) + " < varying " +
            fmt("%.4f", distance[0]) + (tighter ? " ok" : " NO");
  return {pass, detail};
}

// --- bound comparison -----------------------------------------------------

Outcome bound_uniformly_tighter() {
  std::vector<int> ns;
  for (int n = 50; n <= 1000; n += 50) ns.push_back(n);
  const BoundTable t = bound_comparison(ns, motif_family(4), 0.05);
  int bad = 0;
  for (const BoundRow& r : t.rows) bad += !(r.novel < r.classical);
  return {bad == 0 && t.rows.size() == 180,
          std::to_string(t.rows.size() - bad) + "/" + std::to_string(t.rows.size()) +
              " grid points with novel < classical"};
}

Outcome bound_validity() {
  const Motif tri = motif_family(4)[2];
  const double delta = sampling_error({.n = 200, .k = 3, .e = 3, .eta = 0.05}).total;
  int exceed = 0;
  for (int s = 0; s < 1000; ++s) {
    const Graph g = sample_graph(ground_truth_graphon(0), 200, derive_seed(777, s)).graph;
    exceed += std::abs(empirical_density(g, tri) - 1.0 / 27.0) > delta;
  }
  const double frac = exceed / 1000.0;
  return {frac <= 0.05, "exceedance fraction " + fmt("%.3f", frac) + " (limit 0.05, delta_s " +
                            fmt("%.5f", delta) + ")"};
}

// --- contrastive ----------------------------------------------------------

Outcome lower_bound_suite() {
  std::mt19937 gen(31337);
  std::normal_distribution<double> g(0.0, 1.0);
  const double taus[] = {0.2, 0.5, 1.0};
  double worst = -INFINITY;
  long anchors = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 4;
    std::uniform_int_distribution<int> cl(0, k - 1);
    EmbeddingBatch b;
    b.tau = taus[(trial / 4) % 3];
    for (int t = 0; t < 32; ++t) {
      std::vector<double> z(16), p(16);
      for (int d = 0; d < 16; ++d) {
        z[d] = g(gen);
        p[d] = z[d] + 0.5 * g(gen);
      }
      b.anchors.push_back(z);
      b.positives.push_back(p);
      b.clusters.push_back(cl(gen));
    }
    const InfoNceResult r = model_aware_infonce(b);
    const auto lb = loss_lower_bound(b);
    for (int t = 0; t < 32; ++t) {
      if (r.anchors[t].skipped) continue;
      worst = std::max(worst, lb[t].bound - r.anchors[t].loss);
      ++anchors;
    }
  }
  // Equality: every negative of anchor 0 carries the same view, so all its
  // negative scores coincide.
  double equality_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    EmbeddingBatch b;
    b.tau = taus[trial % 3];
    std::vector<double> shared(16);
    for (double& x : shared) x = g(gen);
    const int negatives = 1 + trial % 8;
    for (int t = 0; t <= negatives; ++t) {
      std::vector<double> z(16), p(16);
      for (int d = 0; d < 16; ++d) {
        z[d] = g(gen);
        p[d] = t == 0 ? z[d] + 0.3 * g(gen) : shared[d];
      }
      b.anchors.push_back(z);
      b.positives.push_back(p);
      b.clusters.push_back(t == 0 ? 0 : 1 + t % 3);
    }
    const double loss = model_aware_infonce(b).anchors[0].loss;
    equality_gap = std::max(equality_gap, std::abs(loss_lower_bound(b)[0].bound - loss));
  }
  const bool pass = worst <= 1e-9 && equality_gap <= 1e-9;
  return {pass, std::to_string(anchors) + " anchors, max(bound - loss) = " + fmt("%.3g", worst) +
                    "; equal-score batches max |bound - loss| = " + fmt("%.3g", equality_gap)};
}

Outcome tfr_property() {
  std::mt19937 gen(2718);
  int ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> cls(0, 1 + trial % 5);
    std::uniform_int_distribution<int> len(4, 64);
    LabeledBatch b;
    do {
      b.classes.assign(static_cast<size_t>(len(gen)), 0);
      for (int& c : b.classes) c = cls(gen);
    } while (std::all_of(b.classes.begin(), b.classes.end(),
                         [&](int c) { return c == b.classes[0]; }));
    b.clusters = b.classes;
    const LabeledBatch one[] = {b};
    ok += tfr(one, NegativeMode::kModelAware) >= tfr(one, NegativeMode::kBaseline);
  }
  return {ok == 500, std::to_string(ok) + "/500 batches with model-aware >= baseline"};
}

// --- estimation and mixup -------------------------------------------------

Outcome phi_separation() {
  int perfect = 0;
  double worst_mean = 0.0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    std::vector<Graph> gs;
    for (int i = 0; i < 40; ++i) {
      gs.push_back(sample_graph(Graphon::constant(i < 20 ? 0.2 : 0.8), 150,
                                derive_seed(1000 + seed, i))
                       .graph);
    }
    PhiOptions o;
    o.clusters = 2;
    o.seed = seed;
    const MixtureModel m = phi(gs, o);
    std::vector<int> truth(40);
    for (int i = 0; i < 40; ++i) truth[i] = i < 20 ? 0 : 1;
    perfect += clustering_accuracy(m.assignment, truth) == 1.0;
    const int low = m.assignment[0];
    worst_mean = std::max({worst_mean, std::abs(m.graphons[low].mean() - 0.2),
                           std::abs(m.graphons[1 - low].mean() - 0.8)});
  }
  return {perfect == 10 && worst_mean <= 0.05,
          std::to_string(perfect) + "/10 seeds with accuracy 1.0; max |mean - constant| = " +
              fmt("%.4f", worst_mean) + " (limit 0.05)"};
}

LabeledDataset constant_classes(double lo, double hi, int per_class, int n, uint64_t seed) {
  LabeledDataset ds;
  ds.class_count = 2;
  ds.label_values = {0, 1};
  for (int t = 0; t < 2 * per_class; ++t) {
    ds.graphs.push_back(
        sample_graph(Graphon::constant(t % 2 ? hi : lo), n, derive_seed(seed, t)).graph);
    ds.labels.push_back(t % 2 + 1);
  }
  return ds;
}

double edge_density(const Graph& g) {
  const double n = g.node_count();
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1));
}

Outcome gmam_contracts() {
  bool count_ok = true, label_ok = true;
  for (int per_class : {5, 17, 50}) {
    const LabeledDataset ds = constant_classes(0.2, 0.5, per_class, 20, per_class);
    for (double ratio : {0.1, 0.2, 0.33, 1.0}) {
      GmamOptions o;
      o.ratio = ratio;
      o.seed = 5;
      const GmamResult r = gmam(ds, o);
      const long expect = static_cast<long>(std::ceil(ratio * 2 * per_class - 1e-9));
      count_ok = count_ok && static_cast<long>(r.samples.size()) == expect;
      for (const MixedSample& s : r.samples) {
        double sum = 0;
        for (double y : s.soft_label) sum += y;
        label_ok = label_ok && std::abs(sum - 1.0) <= 1e-12;
      }
    }
  }
  double worst = 0.0;
  const LabeledDataset ds = constant_classes(0.1, 0.9, 10, 100, 99);
  for (double lambda : {0.0, 1.0}) {
    GmamOptions o;
    o.ratio = 0.5;
    o.seed = 6;
    o.fixed_lambda = lambda;
    o.target_nodes = 500;
    for (const MixedSample& s : gmam(ds, o).samples) {
      const int winner = lambda == 1.0 ? s.class_i : s.class_j;
      worst = std::max(worst, std::abs(edge_density(s.graph) - (winner == 1 ? 0.1 : 0.9)));
    }
  }
  return {count_ok && label_ok && worst <= 0.03,
          std::string("counts ") + (count_ok ? "exact" : "WRONG") + ", soft labels " +
              (label_ok ? "sum to 1" : "BROKEN") + ", endpoint density max error " +
              fmt("%.4f", worst) + " (limit 0.03)"};
}

// --- determinism ----------------------------------------------------------

std::string read_tree(const fs::path& root) {
  std::vector<fs::path> files;
  if (fs::is_regular_file(root)) files.push_back(root);
  else
    for (const auto& e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    all += (f == root ? std::string(".") : fs::relative(f, root).string()) + "\n" + s.str();
  }
  return all;
}

void write_tu(const fs::path& dir, const LabeledDataset& ds) {
  fs::create_directories(dir);
  std::ofstream a(dir / "SYN_A.txt"), ind(dir / "SYN_graph_indicator.txt"),
      lab(dir / "SYN_graph_labels.txt");
  int offset = 1;
  for (size_t t = 0; t < ds.graphs.size(); ++t) {
    const Graph& g = ds.graphs[t];
    for (auto [u, v] : g.edges()) {
      a << u + offset << ", " << v + offset << '\n' << v + offset << ", " << u + offset << '\n';
    }
    for (int i = 0; i < g.node_count(); ++i) ind << t + 1 << '\n';
    lab << ds.labels[t] << '\n';
    offset += g.node_count();
  }
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "gmix_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  write_tu(root / "tu", constant_classes(0.15, 0.45, 12, 40, 3));
  {
    std::ofstream(root / "tri.edges") << "0 1\n1 2\n2 0\n";
  }
  const std::string cli = GMIX_CLI_PATH;
  const std::string tu = (root / "tu").string();
  struct Step {
    std::string name, args, output;
  };
  const std::vector<Step> steps = {
      {"synth", "synth --per-class 5 --seed 3 --moments-out " + (root / "OUT.csv").string() +
                    " --out ", "OUT"},
      {"cluster", "cluster --moments " + (root / "synth_0.csv").string() + " --K 5 --seed 4 --out ",
       "OUT"},
      {"estimate", "estimate --tu " + tu + " --name SYN --seed 5 --out ", "OUT"},
      {"mixup", "mixup --tu " + tu + " --name SYN --ratio 0.5 --seed 6 --out ", "OUT"},
      {"augment", "augment --in " + (root / "tri.edges").string() + " --graphon " +
                      (root / "estimate_0" / "graphon_0.txt").string() +
                      " --rate 60 --seed 7 --out ", "OUT"},
      {"ablate", "ablate --mode fixed --per-class 2 --max-motifs 10 --seed 8 --out ", "OUT"},
  };
  std::string failures;
  int identical = 0;
  for (const Step& s : steps) {
    std::string runs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = root / (s.name + "_" + std::to_string(rep));
      std::string args = s.args;
      const std::string moments = (root / (s.name + "_" + std::to_string(rep) + ".csv")).string();
      for (size_t pos; (pos = args.find("OUT.csv")) != std::string::npos;)
        args.replace(pos, 7, fs::path(moments).filename().string());
      const std::string cmd =
          "cd " + root.string() + " && " + cli + " " + args + out.string() + " >/dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        failures += s.name + "(exit) ";
        break;
      }
      runs[rep] = read_tree(out);
      if (s.name == "synth") runs[rep] += read_tree(moments);
    }
    if (!runs[0].empty() && runs[0] == runs[1]) ++identical;
    else if (failures.find(s.name) == std::string::npos) failures += s.name + " ";
  }
  fs::remove_all(root);
  return {identical == static_cast<int>(steps.size()),
          std::to_string(identical) + "/" + std::to_string(steps.size()) +
              " subcommands byte-identical on rerun" +
              (failures.empty() ? "" : "; differing: " + failures)};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments restrict the run to the named criteria.
  const std::set<std::string> only(argv + 1, argv + argc);
  struct Criterion {
    std::string id;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oracle_equivalence", 60, oracle_equivalence},
      {"synthetic_clustering", 600, synthetic_clustering},
      {"bound_uniformly_tighter", 1, bound_uniformly_tighter},
      {"bound_validity", 300, bound_validity},
      {"lower_bound_suite", 600, lower_bound_suite},
      {"tfr_property", 600, tfr_property},
      {"phi_separation", 600, phi_separation},
      {"gmam_contracts", 600, gmam_contracts},
      {"determinism", 600, determinism},
  };
  int hard_failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    const bool known = kKnownShortfalls.count(c.id) > 0;
    std::printf("%s %s: %s [%.2fs of %.0fs]%s\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                o.detail.c_str(), secs, c.budget_seconds,
                !pass && known ? " (known shortfall, see README)" : "");
    std::fflush(stdout);
    if (!pass && !known) ++hard_failures;
  }
  return hard_failures == 0 ? 0 : 1;
}
