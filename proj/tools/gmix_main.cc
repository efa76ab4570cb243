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

// Command-line front end. Every subcommand writes machine-readable files;
// stochastic subcommands require --seed.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmix/augment.h"
#include "gmix/bounds.h"
#include "gmix/contrastive.h"
#include "gmix/csv.h"
#include "gmix/graph.h"
#include "gmix/graphon.h"
#include "gmix/kmeans.h"
#include "gmix/mixture.h"
#include "gmix/motif.h"
#include "gmix/synthetic.h"

namespace fs = std::filesystem;
using namespace gmix;

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct DatasetArgs {
  std::vector<std::string> edge_files;
  std::string tu_dir;
  std::string tu_name;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--in", edge_files, "Edge-list file(s), one graph each");
    auto* dir = cmd->add_option("--tu", tu_dir, "Directory holding TU raw files");
    auto* name = cmd->add_option("--name", tu_name, "TU dataset name (file prefix)");
    dir->needs(name);
    name->needs(dir);
    in->excludes(dir);
  }

  LabeledDataset load() const {
    if (!tu_dir.empty()) return parse_tu_dataset(tu_dir, tu_name);
    if (edge_files.empty()) throw CLI::ValidationError("dataset", "give --in or --tu/--name");
    LabeledDataset ds;
    for (const auto& f : edge_files) {
      EdgeListResult r = read_edge_list_file(f);
      if (r.diagnostics.self_loops > 0) {
        std::cerr << f << ": dropped " << r.diagnostics.self_loops << " self-loop(s)\n";
      }
      ds.graphs.push_back(std::move(r.graph));
    }
    return ds;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::vector<Motif> family_for(int size) {
  if (size == 9) return motif_family(4);
  if (size == 30) return motif_family(5);
  throw CLI::ValidationError("--family", "must be 9 or 30");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphon mixture estimation from motif moment vectors"};
  app.require_subcommand(1);

  // moments
  auto* moments = app.add_subcommand("moments", "Motif moment vectors as CSV");
  DatasetArgs moments_data;
  moments_data.attach(moments);
  int moments_family = 9;
  std::string moments_out;
  moments->add_option("--family", moments_family, "Motif family size (9 or 30)")
      ->check(CLI::IsMember({9, 30}));
  moments->add_option("--out", moments_out, "Output CSV")->required();

  // cluster
  auto* cluster = app.add_subcommand("cluster", "k-means on a moment CSV");
  std::string cluster_in, cluster_out, cluster_centroids;
  std::optional<int> cluster_k;
  uint64_t cluster_seed = 0;
  int cluster_iters = 300, cluster_restarts = 10;
  cluster->add_option("--moments", cluster_in, "Moment CSV from 'moments'")->required();
  cluster->add_option("--K", cluster_k, "Cluster count (default ceil(ln T))");
  cluster->add_option("--seed", cluster_seed, "RNG seed")->required();
  cluster->add_option("--max-iters", cluster_iters, "Lloyd iteration cap");
  cluster->add_option("--restarts", cluster_restarts, "k-means++ restarts");
  cluster->add_option("--out", cluster_out, "Assignment CSV")->required();
  cluster->add_option("--centroids", cluster_centroids, "Optional centroid CSV");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Fit a graphon mixture model");
  DatasetArgs estimate_data;
  estimate_data.attach(estimate);
  PhiOptions phi_opts;
  std::optional<int> estimate_k;
  std::string estimate_out;
  estimate->add_option("--K", estimate_k, "Cluster count (default ceil(ln T))");
  estimate->add_option("--L", phi_opts.refinement_size, "Graphs per cluster used for fitting");
  estimate->add_option("--resolution", phi_opts.resolution, "Step graphon resolution");
  estimate->add_option("--seed", phi_opts.seed, "RNG seed")->required();
  estimate->add_option("--out", estimate_out, "Output directory")->required();

  // mixup
  auto* mixup = app.add_subcommand("mixup", "Mixture-aware mixup on a labeled TU dataset");
  std::string mixup_dir, mixup_name, mixup_out;
  GmamOptions gmam_opts;
  std::optional<int> mixup_nodes;
  std::optional<double> mixup_lambda;
  mixup->add_option("--tu", mixup_dir, "Directory holding TU raw files")->required();
  mixup->add_option("--name", mixup_name, "TU dataset name")->required();
  mixup->add_option("--ratio", gmam_opts.ratio, "Augmentation ratio r in (0, 1]");
  mixup->add_option("--nodes", mixup_nodes, "Nodes per generated graph (default: mean)");
  mixup->add_option("--L", gmam_opts.refinement_size, "Graphs per cluster used for fitting");
  mixup->add_option("--resolution", gmam_opts.resolution, "Step graphon resolution");
  mixup->add_option("--lambda-min", gmam_opts.lambda_min, "Lower end of the lambda sampler");
  mixup->add_option("--lambda-max", gmam_opts.lambda_max, "Upper end of the lambda sampler");
  mixup->add_option("--lambda", mixup_lambda, "Use this lambda for every sample");
  mixup->add_option("--seed", gmam_opts.seed, "RNG seed")->required();
  mixup->add_option("--out", mixup_out, "Output directory")->required();

  // augment
  auto* augment = app.add_subcommand("augment", "Graphon-aware edge resampling");
  std::string aug_in, aug_graphon, aug_latents, aug_model, aug_out;
  int aug_index = -1;
  double aug_rate = 20.0;
  uint64_t aug_seed = 0;
  augment->add_option("--in", aug_in, "Input edge list")->required();
  auto* g_opt = augment->add_option("--graphon", aug_graphon, "Step graphon file");
  auto* m_opt = augment->add_option("--model", aug_model, "Model directory from 'estimate'");
  augment->add_option("--graph-index", aug_index, "Graph index within the model");
  augment->add_option("--latents", aug_latents,
                      "Latent positions, one per line (default: degree rank)");
  augment->add_option("--rate", aug_rate, "Percent of node pairs to resample")
      ->check(CLI::Range(0.0, 100.0));
  augment->add_option("--seed", aug_seed, "RNG seed")->required();
  augment->add_option("--out", aug_out, "Output edge list")->required();
  g_opt->excludes(m_opt);

  // infonce
  auto* infonce = app.add_subcommand("infonce", "Model-aware InfoNCE on an embedding batch");
  std::string nce_in, nce_out;
  double nce_tau = 0.5;
  infonce->add_option("--in", nce_in, "Embedding CSV")->required();
  infonce->add_option("--tau", nce_tau, "Temperature")->check(CLI::PositiveNumber);
  infonce->add_option("--out", nce_out, "Per-anchor CSV")->required();

  // tfr
  auto* tfr_cmd = app.add_subcommand("tfr", "True-to-false negative ratio");
  std::string tfr_in, tfr_out;
  tfr_cmd->add_option("--in", tfr_in, "CSV with columns batch,class,cluster")->required();
  tfr_cmd->add_option("--out", tfr_out, "Output CSV")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Sampling-error bound comparison table");
  double bounds_eta = 0.05;
  int n_min = 50, n_max = 1000, n_step = 50, bounds_family = 9;
  std::string bounds_out, bounds_ratios;
  bounds->add_option("--eta", bounds_eta, "Failure probability")->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--n-min", n_min, "Smallest graph size");
  bounds->add_option("--n-max", n_max, "Largest graph size");
  bounds->add_option("--n-step", n_step, "Graph size step");
  bounds->add_option("--family", bounds_family, "Motif family size (9 or 30)")
      ->check(CLI::IsMember({9, 30}));
  bounds->add_option("--out", bounds_out, "Output CSV")->required();
  bounds->add_option("--ratios", bounds_ratios, "Optional per-motif min ratio CSV");

  // synth
  auto* synth = app.add_subcommand("synth", "Clustering experiment on the reference graphons");
  SynthConfig synth_cfg;
  std::string synth_mode = "varying", synth_out, synth_moments;
  synth->add_option("--mode", synth_mode, "varying or fixed")
      ->check(CLI::IsMember({"varying", "fixed"}));
  synth->add_option("--per-class", synth_cfg.graphs_per_class, "Graphs per reference graphon");
  synth->add_option("--K", synth_cfg.clusters, "k-means cluster count");
  synth->add_option("--max-k", synth_cfg.max_k, "Largest motif size (4 or 5)")
      ->check(CLI::IsMember({4, 5}));
  synth->add_option("--seed", synth_cfg.seed, "RNG seed")->required();
  synth->add_option("--out", synth_out, "Report file (JSON)")->required();
  synth->add_option("--moments-out", synth_moments, "Optional moment CSV");

  // ablate
  auto* ablate = app.add_subcommand("ablate", "Accuracy versus number of motifs");
  SynthConfig ablate_cfg;
  std::string ablate_mode = "varying", ablate_out;
  int ablate_max = 15;
  ablate->add_option("--mode", ablate_mode, "varying or fixed")
      ->check(CLI::IsMember({"varying", "fixed"}));
  ablate->add_option("--per-class", ablate_cfg.graphs_per_class, "Graphs per reference graphon");
  ablate->add_option("--K", ablate_cfg.clusters, "k-means cluster count");
  ablate->add_option("--max-motifs", ablate_max, "Largest motif prefix (<= 30)")
      ->check(CLI::Range(1, 30));
  ablate->add_option("--seed", ablate_cfg.seed, "RNG seed")->required();
  ablate->add_option("--out", ablate_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (moments->parsed()) {
      const LabeledDataset ds = moments_data.load();
      const std::vector<Motif> family = family_for(moments_family);
      std::vector<MomentVector> vectors;
      for (const Graph& g : ds.graphs) {
        vectors.push_back(moment_vector(g, family));
        if (vectors.back().any_degenerate()) {
          std::cerr << "graph " << vectors.size() - 1 << " has fewer nodes than some motifs;"
                    << " those densities are 0\n";
        }
      }
      auto out = open_out(moments_out);
      write_moment_csv(out, family, vectors);
    } else if (cluster->parsed()) {
      std::ifstream in(cluster_in);
      if (!in) throw std::runtime_error("cannot open " + cluster_in);
      const std::vector<Point> pts = read_moment_csv(in);
      if (pts.empty()) throw std::runtime_error("moment CSV has no rows");
      const int k = cluster_k.value_or(default_cluster_count(static_cast<int64_t>(pts.size())));
      const KMeansResult km = kmeans(pts, k, cluster_iters, cluster_seed, cluster_restarts);
      auto out = open_out(cluster_out);
      out << "graph_index,cluster\n";
      for (size_t i = 0; i < km.assignment.size(); ++i) out << i << ',' << km.assignment[i] << '\n';
      if (!cluster_centroids.empty()) {
        auto cout_ = open_out(cluster_centroids);
        cout_ << "cluster";
        for (size_t d = 0; d < pts[0].size(); ++d) cout_ << ",m" << d;
        cout_ << '\n';
        for (size_t c = 0; c < km.centroids.size(); ++c) {
          cout_ << c;
          for (double v : km.centroids[c]) cout_ << ',' << format_real(v);
          cout_ << '\n';
        }
      }
    } else if (estimate->parsed()) {
      const LabeledDataset ds = estimate_data.load();
      phi_opts.clusters = estimate_k;
      const MixtureModel m = phi(ds.graphs, phi_opts);
      write_mixture_model(estimate_out, m);
    } else if (mixup->parsed()) {
      const LabeledDataset ds = parse_tu_dataset(mixup_dir, mixup_name);
      gmam_opts.target_nodes = mixup_nodes;
      gmam_opts.fixed_lambda = mixup_lambda;
      const GmamResult r = gmam(ds, gmam_opts);
      write_augmented_set(mixup_out, r.samples);
    } else if (augment->parsed()) {
      const Graph g = read_edge_list_file(aug_in).graph;
      std::optional<Graphon> w;
      std::optional<LatentPositions> latents;
      if (!aug_model.empty()) {
        const MixtureModel m = read_mixture_model(aug_model);
        if (aug_index < 0 || aug_index >= static_cast<int>(m.assignment.size())) {
          throw CLI::ValidationError("--graph-index", "required and within the model");
        }
        w = Graphon(m.graphons[m.assignment[aug_index]]);
        latents = m.latents[aug_index];
      } else if (!aug_graphon.empty()) {
        std::ifstream in(aug_graphon);
        if (!in) throw std::runtime_error("cannot open " + aug_graphon);
        w = Graphon(read_step_graphon(in));
      } else {
        throw CLI::ValidationError("augment", "give --graphon or --model");
      }
      if (!aug_latents.empty()) {
        std::ifstream in(aug_latents);
        if (!in) throw std::runtime_error("cannot open " + aug_latents);
        LatentPositions lp;
        std::string line;
        while (next_record(in, line)) lp.values.push_back(parse_real(line));
        latents = std::move(lp);
      }
      if (!latents) latents = degree_rank_latents(g);
      const Graph out_g = graphon_augment(g, *w, *latents, aug_rate, aug_seed);
      write_edge_list_file(aug_out, out_g);
    } else if (infonce->parsed()) {
      std::ifstream in(nce_in);
      if (!in) throw std::runtime_error("cannot open " + nce_in);
      const EmbeddingBatch batch = read_embedding_batch(in, nce_tau);
      const InfoNceResult loss = model_aware_infonce(batch);
      const std::vector<AnchorBound> lb = loss_lower_bound(batch);
      auto out = open_out(nce_out);
      out << "anchor,cluster,skipped,loss,lower_bound,centroid_form\n";
      for (size_t t = 0; t < batch.size(); ++t) {
        out << t << ',' << batch.clusters[t] << ',' << (loss.anchors[t].skipped ? 1 : 0);
        if (loss.anchors[t].skipped) {
          out << ",,,\n";
        } else {
          out << ',' << format_real(loss.anchors[t].loss) << ',' << format_real(lb[t].bound)
              << ',' << format_real(lb[t].centroid_form) << '\n';
        }
      }
      if (loss.degenerate()) {
        std::cout << "degenerate batch: every anchor skipped\n";
      } else {
        std::cout << "mean_loss " << format_real(*loss.mean_loss) << " skipped "
                  << loss.skipped << '\n';
      }
    } else if (tfr_cmd->parsed()) {
      std::ifstream in(tfr_in);
      if (!in) throw std::runtime_error("cannot open " + tfr_in);
      std::string line;
      if (!next_record(in, line)) throw std::runtime_error("empty TFR input");
      std::vector<LabeledBatch> batches;
      std::vector<long long> ids;
      while (next_record(in, line)) {
        const auto f = split_csv(line);
        if (f.size() != 3) throw std::runtime_error("TFR rows need batch,class,cluster");
        const long long id = parse_integer(f[0]);
        if (ids.empty() || ids.back() != id) {
          ids.push_back(id);
          batches.emplace_back();
        }
        batches.back().classes.push_back(static_cast<int>(parse_integer(f[1])));
        batches.back().clusters.push_back(static_cast<int>(parse_integer(f[2])));
      }
      auto out = open_out(tfr_out);
      out << "mode,tfr\n";
      out << "baseline," << format_real(tfr(batches, NegativeMode::kBaseline)) << '\n';
      out << "model_aware," << format_real(tfr(batches, NegativeMode::kModelAware)) << '\n';
    } else if (bounds->parsed()) {
      if (n_step < 1 || n_min < 2 || n_max < n_min) {
        throw CLI::ValidationError("bounds", "need 2 <= n-min <= n-max and n-step >= 1");
      }
      std::vector<int> ns;
      for (int n = n_min; n <= n_max; n += n_step) ns.push_back(n);
      const std::vector<Motif> family = family_for(bounds_family);
      const BoundTable table = bound_comparison(ns, family, bounds_eta);
      auto out = open_out(bounds_out);
      write_bound_csv(out, table);
      if (!bounds_ratios.empty()) {
        auto r = open_out(bounds_ratios);
        r << "motif_id,k,e,min_ratio\n";
        for (size_t i = 0; i < family.size(); ++i) {
          r << family[i].id << ',' << family[i].vertex_count << ',' << family[i].edge_count()
            << ',' << format_real(table.min_ratio[i]) << '\n';
        }
      }
    } else if (synth->parsed()) {
      synth_cfg.size_mode = parse_size_mode(synth_mode);
      const SynthReport report = run_synthetic(synth_cfg);
      auto out = open_out(synth_out);
      write_synth_report(out, synth_cfg, report);
      if (!synth_moments.empty()) {
        auto m = open_out(synth_moments);
        write_moment_csv(m, report.family, report.data.moments);
      }
    } else if (ablate->parsed()) {
      ablate_cfg.size_mode = parse_size_mode(ablate_mode);
      const std::vector<AblationRow> rows = run_motif_ablation(ablate_cfg, ablate_max);
      auto out = open_out(ablate_out);
      write_ablation_csv(out, rows);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
