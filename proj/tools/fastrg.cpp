// Copyright 2026 The fastrg Authors.
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

// Command line for sampling sparse random graphs whose expected adjacency
// matrix is X S Y^T. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fastrg/bench.hpp"
#include "fastrg/blockmodels.hpp"
#include "fastrg/error.hpp"
#include "fastrg/io.hpp"
#include "fastrg/model.hpp"
#include "fastrg/sampler.hpp"

namespace {

using fastrg::EdgeListFormat;
using fastrg::FactorModel;
using fastrg::Matrix;
using fastrg::MatrixFormat;

// Sampling knobs shared by `sample` and every `model` family.
struct SampleFlags {
  double avg_deg = 0.0;
  bool undirected = false;
  bool no_self_loops = false;
  bool simple = false;
  bool parallel_blocks = false;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "tsv";
  CLI::Option* avg_deg_opt = nullptr;
};

void add_sample_flags(CLI::App* cmd, SampleFlags& f) {
  f.avg_deg_opt =
      cmd->add_option("--avg-deg", f.avg_deg,
                      "Rescale S so the expected edges per node (raw "
                      "directed multigraph) match this value")
          ->check(CLI::PositiveNumber);
  cmd->add_flag("--undirected", f.undirected,
                "Sample an undirected graph (halves S, merges directions; "
                "requires Y = X)");
  cmd->add_flag("--no-self-loops", f.no_self_loops,
                "Condition every edge on I != J (requires Y = X)");
  cmd->add_flag("--simple", f.simple,
                "Undirected, loopless, thresholded 0/1 output (implies "
                "--undirected --no-self-loops)");
  cmd->add_flag("--parallel-blocks", f.parallel_blocks,
                "Draw blocks on per-block RNG streams (same output on any "
                "thread count)");
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--out", f.out_path, "Output edge list path")->required();
  cmd->add_option("--format", f.format, "Edge list format")
      ->check(CLI::IsMember({"tsv", "matrix-market"}))
      ->capture_default_str();
}

EdgeListFormat edge_list_format(const std::string& name) {
  return name == "matrix-market" ? EdgeListFormat::matrix_market_coordinate
                                 : EdgeListFormat::tsv;
}

MatrixFormat matrix_format(const std::string& path, const std::string& mode) {
  if (mode == "csv") return MatrixFormat::dense_csv;
  if (mode == "matrix-market") return MatrixFormat::matrix_market;
  const bool mm = path.size() > 4 && (path.ends_with(".mtx") ||
                                      path.ends_with(".mm"));
  return mm ? MatrixFormat::matrix_market : MatrixFormat::dense_csv;
}

int sample_and_write(const FactorModel& model, const SampleFlags& f) {
  const FactorModel* effective = &model;
  FactorModel scaled;
  if (f.avg_deg_opt->count() > 0) {
    scaled = fastrg::scale_to_avg_degree(model, f.avg_deg);
    effective = &scaled;
  }

  fastrg::GraphOptions options;
  options.directed = !(f.undirected || f.simple);
  options.allow_self_loops = !(f.no_self_loops || f.simple);
  options.output_kind = f.simple ? fastrg::OutputKind::thresholded_simple
                                 : fastrg::OutputKind::poisson_multigraph;
  options.seed = f.seed;
  options.parallel_blocks = f.parallel_blocks;

  const fastrg::EdgeList edges = fastrg::sample_graph(*effective, options);
  fastrg::write_edge_list(edges, f.out_path, edge_list_format(f.format));
  return 0;
}

void warn_bernoulli_avg_deg(const SampleFlags& f, bool bernoulli) {
  if (bernoulli && f.avg_deg_opt->count() > 0) {
    std::cerr << "warning: --avg-deg rescales S after the Bernoulli "
                 "transform, so thresholded edge probabilities no longer "
                 "equal the B entries\n";
  }
}

Matrix square_b(const std::vector<double>& b, std::size_t k,
                const std::string& flag) {
  if (b.size() != k * k) {
    throw CLI::ValidationError(
        flag, "needs " + std::to_string(k * k) + " row-major entries for K=" +
                  std::to_string(k) + " blocks, got " +
                  std::to_string(b.size()));
  }
  return Matrix(k, k, b);
}

std::vector<std::uint32_t> resolve_memberships(
    const std::vector<std::size_t>& block_sizes,
    const std::vector<std::uint32_t>& memberships) {
  if (!block_sizes.empty()) {
    return fastrg::memberships_from_block_sizes(block_sizes);
  }
  return memberships;
}

std::size_t block_count(const std::vector<std::size_t>& block_sizes,
                        const std::vector<std::uint32_t>& memberships) {
  if (!block_sizes.empty()) return block_sizes.size();
  std::uint32_t max_label = 0;
  for (std::uint32_t m : memberships) max_label = std::max(max_label, m);
  return static_cast<std::size_t>(max_label) + 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse random graphs with low-rank expected adjacency"};
  app.require_subcommand(1);

  // sample: factor matrices from files
  auto* sample = app.add_subcommand(
      "sample", "Sample from factor matrices X, S (and optionally Y) read "
                "from files");
  std::string x_path, s_path, y_path;
  std::string mat_mode = "auto";
  bool sample_bernoulli = false;
  SampleFlags sample_flags;
  sample->add_option("--x", x_path, "Factor matrix X (n x K)")->required();
  sample->add_option("--s", s_path, "Mixing matrix S (Kx x Ky)")->required();
  sample->add_option("--y", y_path,
                     "Factor matrix Y (d x Ky); omitted means Y = X");
  sample->add_option("--matrix-format", mat_mode,
                     "How to parse the factor matrix files")
      ->check(CLI::IsMember({"auto", "csv", "matrix-market"}))
      ->capture_default_str();
  sample->add_flag("--bernoulli", sample_bernoulli,
                   "Transform S entries by -ln(1-s) so thresholded output "
                   "has exact edge probabilities (one-hot X with Y = X only)");
  add_sample_flags(sample, sample_flags);

  // model: named blockmodel families
  auto* model_cmd = app.add_subcommand(
      "model", "Sample from a named blockmodel family");
  model_cmd->require_subcommand(1);

  auto* sbm = model_cmd->add_subcommand("sbm", "Stochastic blockmodel");
  std::vector<std::size_t> sbm_sizes;
  std::vector<std::uint32_t> sbm_members;
  std::vector<double> sbm_b;
  bool sbm_bernoulli = false;
  SampleFlags sbm_flags;
  auto* sbm_sizes_opt =
      sbm->add_option("--block-sizes", sbm_sizes,
                      "Comma-separated block sizes; nodes fill block 0 first")
          ->delimiter(',');
  sbm->add_option("--memberships", sbm_members,
                  "Comma-separated per-node block labels")
      ->delimiter(',')
      ->excludes(sbm_sizes_opt);
  sbm->add_option("--b", sbm_b, "Row-major K*K block connectivity values")
      ->delimiter(',')
      ->required();
  sbm->add_flag("--bernoulli", sbm_bernoulli,
                "Treat B as edge probabilities via the -ln(1-B) transform");
  add_sample_flags(sbm, sbm_flags);

  auto* dcsbm =
      model_cmd->add_subcommand("dcsbm", "Degree-corrected blockmodel");
  std::vector<std::size_t> dcsbm_sizes;
  std::vector<std::uint32_t> dcsbm_members;
  std::vector<double> dcsbm_theta;
  std::vector<double> dcsbm_b;
  SampleFlags dcsbm_flags;
  auto* dcsbm_sizes_opt =
      dcsbm->add_option("--block-sizes", dcsbm_sizes,
                        "Comma-separated block sizes")
          ->delimiter(',');
  dcsbm->add_option("--memberships", dcsbm_members,
                    "Comma-separated per-node block labels")
      ->delimiter(',')
      ->excludes(dcsbm_sizes_opt);
  dcsbm->add_option("--theta", dcsbm_theta,
                    "Comma-separated positive degree parameters, one per node")
      ->delimiter(',')
      ->required();
  dcsbm->add_option("--b", dcsbm_b, "Row-major K*K block connectivity values")
      ->delimiter(',')
      ->required();
  add_sample_flags(dcsbm, dcsbm_flags);

  auto* mmsbm = model_cmd->add_subcommand(
      "mmsbm", "Mixed-membership blockmodel (rows of Pi on the simplex)");
  std::string mmsbm_pi_path;
  std::vector<double> mmsbm_b;
  SampleFlags mmsbm_flags;
  mmsbm->add_option("--pi", mmsbm_pi_path, "CSV file with the n x K matrix Pi")
      ->required();
  mmsbm->add_option("--b", mmsbm_b, "Row-major K*K block connectivity values")
      ->delimiter(',')
      ->required();
  add_sample_flags(mmsbm, mmsbm_flags);

  auto* overlapping = model_cmd->add_subcommand(
      "overlapping", "Overlapping blockmodel (binary membership matrix Z)");
  std::string overlapping_z_path;
  std::vector<double> overlapping_b;
  SampleFlags overlapping_flags;
  overlapping
      ->add_option("--z", overlapping_z_path,
                   "CSV file with the binary n x K matrix Z")
      ->required();
  overlapping
      ->add_option("--b", overlapping_b,
                   "Row-major K*K block connectivity values")
      ->delimiter(',')
      ->required();
  add_sample_flags(overlapping, overlapping_flags);

  auto* chunglu = model_cmd->add_subcommand(
      "chunglu", "Chung-Lu weights (all-equal weights give the "
                 "Erdos-Renyi-type case)");
  std::vector<double> chunglu_weights;
  std::string chunglu_weights_path;
  SampleFlags chunglu_flags;
  auto* chunglu_w_opt =
      chunglu->add_option("--weights", chunglu_weights,
                          "Comma-separated non-negative node weights")
          ->delimiter(',');
  chunglu
      ->add_option("--weights-file", chunglu_weights_path,
                   "CSV file of node weights, flattened row-major")
      ->excludes(chunglu_w_opt);
  add_sample_flags(chunglu, chunglu_flags);

  // bench: the scaling experiment
  auto* bench = app.add_subcommand(
      "bench", "Time edge generation over an (n, expected_m) grid; CSV on "
               "standard output");
  fastrg::BenchConfig bench_config;
  bench->add_option("--n-grid", bench_config.n_grid,
                    "Comma-separated node counts")
      ->delimiter(',')
      ->required();
  bench->add_option("--m-grid", bench_config.m_grid,
                    "Comma-separated target expected edge counts")
      ->delimiter(',')
      ->required();
  bench->add_option("--reps", bench_config.reps, "Timed repetitions per point")
      ->capture_default_str();
  bench->add_option("--seed", bench_config.seed, "Master seed")
      ->capture_default_str();
  bench->add_option("--max-elements", bench_config.max_elements,
                    "Cap on n * K factor entries per grid point")
      ->capture_default_str();
  bench->add_flag("--parallel", bench_config.parallel_points,
                  "Run grid points concurrently (timings may contend)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sample->parsed()) {
      Matrix x = fastrg::read_factor_matrix(x_path,
                                            matrix_format(x_path, mat_mode));
      Matrix s = fastrg::read_factor_matrix(s_path,
                                            matrix_format(s_path, mat_mode));
      FactorModel model;
      if (y_path.empty()) {
        model = fastrg::validate_square(std::move(x), std::move(s));
      } else {
        Matrix y = fastrg::read_factor_matrix(
            y_path, matrix_format(y_path, mat_mode));
        model = fastrg::validate(std::move(x), std::move(s), std::move(y));
      }
      if (sample_bernoulli) {
        if (!fastrg::is_sbm_shaped(model)) {
          throw fastrg::Error(
              fastrg::Errc::unsupported_mean_function,
              "--bernoulli requires one-hot rows of X with Y = X; the "
              "transform is exact only for that shape");
        }
        model = fastrg::validate_square(
            model.x, fastrg::bernoulli_log_transform(model.s));
      }
      warn_bernoulli_avg_deg(sample_flags, sample_bernoulli);
      return sample_and_write(model, sample_flags);
    }

    if (sbm->parsed()) {
      const auto members = resolve_memberships(sbm_sizes, sbm_members);
      if (members.empty()) {
        std::cerr << "sbm: need --block-sizes or --memberships\n";
        return 1;
      }
      const std::size_t k = block_count(sbm_sizes, sbm_members);
      const FactorModel model = fastrg::sbm_factors(
          members, square_b(sbm_b, k, "--b"), sbm_bernoulli);
      warn_bernoulli_avg_deg(sbm_flags, sbm_bernoulli);
      return sample_and_write(model, sbm_flags);
    }

    if (dcsbm->parsed()) {
      const auto members = resolve_memberships(dcsbm_sizes, dcsbm_members);
      if (members.empty()) {
        std::cerr << "dcsbm: need --block-sizes or --memberships\n";
        return 1;
      }
      const std::size_t k = block_count(dcsbm_sizes, dcsbm_members);
      const FactorModel model = fastrg::dcsbm_factors(
          members, dcsbm_theta, square_b(dcsbm_b, k, "--b"));
      return sample_and_write(model, dcsbm_flags);
    }

    if (mmsbm->parsed()) {
      const Matrix pi = fastrg::read_factor_matrix(
          mmsbm_pi_path, matrix_format(mmsbm_pi_path, "auto"));
      const FactorModel model = fastrg::mixed_membership_factors(
          pi, square_b(mmsbm_b, pi.cols(), "--b"));
      return sample_and_write(model, mmsbm_flags);
    }

    if (overlapping->parsed()) {
      const Matrix z = fastrg::read_factor_matrix(
          overlapping_z_path, matrix_format(overlapping_z_path, "auto"));
      const FactorModel model = fastrg::overlapping_factors(
          z, square_b(overlapping_b, z.cols(), "--b"));
      return sample_and_write(model, overlapping_flags);
    }

    if (chunglu->parsed()) {
      std::vector<double> weights = chunglu_weights;
      if (!chunglu_weights_path.empty()) {
        const Matrix w = fastrg::read_factor_matrix(
            chunglu_weights_path, matrix_format(chunglu_weights_path, "auto"));
        weights.assign(w.data().begin(), w.data().end());
      }
      if (weights.empty()) {
        std::cerr << "chunglu: need --weights or --weights-file\n";
        return 1;
      }
      const FactorModel model = fastrg::chung_lu_factors(weights);
      return sample_and_write(model, chunglu_flags);
    }

    if (bench->parsed()) {
      fastrg::run_bench(bench_config, &std::cout);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const fastrg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
