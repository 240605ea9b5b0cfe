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

#ifndef FASTRG_SAMPLER_HPP_
#define FASTRG_SAMPLER_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fastrg/alias.hpp"
#include "fastrg/edge_list.hpp"
#include "fastrg/model.hpp"
#include "fastrg/rng.hpp"

namespace fastrg {

// Multinomial allocation of m edges to (u, v) block pairs, row-major.
struct BlockCounts {
  std::size_t kx = 0;
  std::size_t ky = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t operator()(std::size_t u, std::size_t v) const {
    return counts[u * ky + v];
  }
};

enum class OutputKind {
  poisson_multigraph,
  thresholded_simple,  // undirected, loopless, 0/1 multiplicities
};

struct GraphOptions {
  bool directed = true;
  bool allow_self_loops = true;
  OutputKind output_kind = OutputKind::poisson_multigraph;
  std::uint64_t seed = 0;
  // When set, each (u, v) block draws from its own stream derived from
  // (seed, u, v), so thread scheduling cannot change the output.
  bool parallel_blocks = false;
};

// Alias tables over the block weights and the normalized factor columns.
// Build is O((n + d) * K); every draw after that is O(1). Immutable once
// built; concurrent draws need per-caller Rng streams.
class EdgeSampler {
 public:
  explicit EdgeSampler(const NormalizedModel& norm);

  bool degenerate() const { return !block_table_.has_value(); }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

  // (u, v) with probability Stilde_uv / lambda_total.
  std::pair<std::uint32_t, std::uint32_t> draw_block(Rng& rng) const {
    const std::uint32_t cell = block_table_->draw(rng);
    return {cell / static_cast<std::uint32_t>(ky_),
            cell % static_cast<std::uint32_t>(ky_)};
  }

  std::uint32_t draw_source(std::size_t u, Rng& rng) const {
    return x_cols_[u]->draw(rng);
  }
  std::uint32_t draw_target(std::size_t v, Rng& rng) const {
    return (square_ ? x_cols_ : y_cols_)[v]->draw(rng);
  }

  // One edge of the raw directed multigraph; consumes a fixed number of
  // stream values (block, source, target).
  Edge draw_edge(Rng& rng) const {
    const auto [u, v] = draw_block(rng);
    return Edge{draw_source(u, rng), draw_target(v, rng)};
  }

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::size_t kx_ = 0;
  std::size_t ky_ = 0;
  bool square_ = false;
  std::optional<AliasTable> block_table_;  // empty when lambda_total == 0
  std::vector<std::optional<AliasTable>> x_cols_;
  std::vector<std::optional<AliasTable>> y_cols_;  // unused when square
};

// m ~ Poisson(lambda_total). Throws Error{ModelTooLarge} when lambda_total
// exceeds 2^62 (edge counts would overflow the 64-bit index type).
std::uint64_t sample_edge_count(const NormalizedModel& norm, Rng& rng);

// counts ~ Multinomial(m, Stilde / lambda_total), row-major conditioning.
BlockCounts sample_block_counts(const NormalizedModel& norm, std::uint64_t m,
                                Rng& rng);

// Blocked endpoint draws: per (u, v) in row-major order, counts(u, v)
// sources from Xtilde column u then as many targets from Ytilde column v,
// paired in draw order.
EdgeList sample_edges(const NormalizedModel& norm, const BlockCounts& counts,
                      Rng& rng);

// Same draw, reusing already-built tables (lets callers keep table
// construction out of timed or repeated sections).
EdgeList sample_edges(const EdgeSampler& sampler, const BlockCounts& counts,
                      Rng& rng);

// P((I, J) = (i, j)) = lambda_ij / lambda_total. Builds throwaway tables;
// use EdgeSampler::draw_edge for repeated draws. Throws
// Error{DegenerateModel} when lambda_total == 0.
Edge sample_single_edge(const NormalizedModel& norm, Rng& rng);

// Unbounded i.i.d. edge sequence. The first k values equal k calls of
// sample_single_edge on the same seed.
class EdgeStream {
 public:
  EdgeStream(const FactorModel& model, std::uint64_t seed);
  EdgeStream(const FactorModel& model, Rng rng);

  Edge next() { return sampler_.draw_edge(rng_); }

 private:
  NormalizedModel norm_;
  EdgeSampler sampler_;
  Rng rng_;
};

// Full orchestration: Poisson edge count, blocked draws, then the selected
// post-processing. Undirected and loopless modes require a square model.
// All randomness derives from options.seed.
EdgeList sample_graph(const FactorModel& model, const GraphOptions& options);

}  // namespace fastrg

#endif  // FASTRG_SAMPLER_HPP_
