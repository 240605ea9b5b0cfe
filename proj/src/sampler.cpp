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

#include "fastrg/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "fastrg/error.hpp"
#include "fastrg/postprocess.hpp"

namespace fastrg {

namespace {

// Edge counts must fit the 64-bit index type with slack for Poisson spread.
constexpr double kMaxLambdaTotal = 4611686018427387904.0;  // 2^62

constexpr std::uint64_t kBlockStreamTag = 0xb10c;

constexpr std::uint64_t kMaxLoopRejections = 1000000;

std::vector<double> extract_column(const Matrix& m, std::size_t col) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i] = m(i, col);
  }
  return out;
}

struct BlockTask {
  std::size_t u;
  std::size_t v;
  std::uint64_t count;
};

// Edges for one (u, v) block: count sources then count targets, paired in
// draw order.
void emit_block(const EdgeSampler& sampler, const BlockTask& task, Rng& rng,
                std::vector<Edge>& out) {
  out.reserve(out.size() + task.count);
  const std::size_t base = out.size();
  for (std::uint64_t t = 0; t < task.count; ++t) {
    out.push_back(Edge{sampler.draw_source(task.u, rng), 0});
  }
  for (std::uint64_t t = 0; t < task.count; ++t) {
    out[base + t].dst = sampler.draw_target(task.v, rng);
  }
}

// Row-major block order. With per_block_seed set, every block gets its own
// stream derived from (seed, u*Ky + v) and blocks run on a small pool;
// output order stays canonical either way.
std::vector<Edge> blocked_edges(const EdgeSampler& sampler,
                                const BlockCounts& counts, Rng& rng,
                                bool parallel_blocks, std::uint64_t seed) {
  std::vector<BlockTask> tasks;
  for (std::size_t u = 0; u < counts.kx; ++u) {
    for (std::size_t v = 0; v < counts.ky; ++v) {
      const std::uint64_t c = counts(u, v);
      if (c > 0) tasks.push_back(BlockTask{u, v, c});
    }
  }

  if (!parallel_blocks) {
    std::vector<Edge> edges;
    edges.reserve(counts.total);
    for (const BlockTask& task : tasks) {
      emit_block(sampler, task, rng, edges);
    }
    return edges;
  }

  std::vector<std::vector<Edge>> parts(tasks.size());
  const auto run_task = [&](std::size_t idx) {
    const BlockTask& task = tasks[idx];
    Rng block_rng(derive_stream(seed, kBlockStreamTag,
                                task.u * counts.ky + task.v));
    emit_block(sampler, task, block_rng, parts[idx]);
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers =
      std::min<std::size_t>(hw == 0 ? 1 : hw, tasks.size());
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < tasks.size(); ++idx) run_task(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= tasks.size()) return;
          try {
            run_task(idx);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Edge> edges;
  edges.reserve(counts.total);
  for (const std::vector<Edge>& part : parts) {
    edges.insert(edges.end(), part.begin(), part.end());
  }
  return edges;
}

}  // namespace

EdgeSampler::EdgeSampler(const NormalizedModel& norm) {
  n_ = norm.xtilde.rows();
  d_ = norm.ytilde.rows();
  kx_ = norm.stilde.rows();
  ky_ = norm.stilde.cols();
  square_ = norm.square;
  constexpr std::size_t kMaxIndex = std::numeric_limits<std::uint32_t>::max();
  if (n_ > kMaxIndex || d_ > kMaxIndex || kx_ * ky_ > kMaxIndex) {
    throw Error(Errc::model_too_large, "node count exceeds 32-bit indices");
  }

  if (norm.lambda_total > 0.0) {
    block_table_ = AliasTable::build(norm.stilde.data());
  }

  x_cols_.resize(kx_);
  for (std::size_t u = 0; u < kx_; ++u) {
    if (norm.cx[u] > 0.0) {
      x_cols_[u] = AliasTable::build(extract_column(norm.xtilde, u));
    }
  }
  if (!square_) {
    y_cols_.resize(ky_);
    for (std::size_t v = 0; v < ky_; ++v) {
      if (norm.cy[v] > 0.0) {
        y_cols_[v] = AliasTable::build(extract_column(norm.ytilde, v));
      }
    }
  }
}

std::uint64_t sample_edge_count(const NormalizedModel& norm, Rng& rng) {
  if (norm.lambda_total > kMaxLambdaTotal) {
    throw Error(Errc::model_too_large,
                "lambda_total = " + std::to_string(norm.lambda_total) +
                    " exceeds 2^62");
  }
  return sample_poisson(rng, norm.lambda_total);
}

BlockCounts sample_block_counts(const NormalizedModel& norm, std::uint64_t m,
                                Rng& rng) {
  BlockCounts out;
  out.kx = norm.stilde.rows();
  out.ky = norm.stilde.cols();
  out.total = m;
  if (m == 0) {
    out.counts.assign(out.kx * out.ky, 0);
    return out;
  }
  out.counts = sample_multinomial(rng, m, norm.stilde.data());
  return out;
}

EdgeList sample_edges(const NormalizedModel& norm, const BlockCounts& counts,
                      Rng& rng) {
  const EdgeSampler sampler(norm);
  return sample_edges(sampler, counts, rng);
}

EdgeList sample_edges(const EdgeSampler& sampler, const BlockCounts& counts,
                      Rng& rng) {
  EdgeList out;
  out.n = sampler.n();
  out.d = sampler.d();
  out.directed = true;
  out.edges = blocked_edges(sampler, counts, rng, false, 0);
  return out;
}

Edge sample_single_edge(const NormalizedModel& norm, Rng& rng) {
  const EdgeSampler sampler(norm);
  if (sampler.degenerate()) {
    throw Error(Errc::degenerate_model, "lambda_total is 0, no edge to draw");
  }
  return sampler.draw_edge(rng);
}

EdgeStream::EdgeStream(const FactorModel& model, std::uint64_t seed)
    : EdgeStream(model, Rng(seed)) {}

EdgeStream::EdgeStream(const FactorModel& model, Rng rng)
    : norm_(normalize(model)), sampler_(norm_), rng_(rng) {
  if (sampler_.degenerate()) {
    throw Error(Errc::degenerate_model, "lambda_total is 0, empty stream");
  }
}

EdgeList sample_graph(const FactorModel& model, const GraphOptions& options) {
  const bool thresholded =
      options.output_kind == OutputKind::thresholded_simple;
  const bool undirected = !options.directed || thresholded;
  const bool loopless = !options.allow_self_loops || thresholded;
  if ((undirected || loopless) && !model.square) {
    throw Error(Errc::not_square,
                "undirected and loopless modes require Y = X");
  }

  // Undirected sampling halves S up front; the symmetrize pass below then
  // merges the two directions of each pair.
  std::optional<FactorModel> halved;
  const FactorModel* work = &model;
  if (undirected) {
    halved = model.with_scaled_s(0.5);
    work = &*halved;
  }

  const NormalizedModel norm = normalize(*work);
  Rng rng(options.seed);

  EdgeList out;
  out.n = model.n();
  out.d = model.d();
  out.directed = !undirected;

  if (loopless) {
    const double rate = loopless_rate(*work);
    if (rate > kMaxLambdaTotal) {
      throw Error(Errc::model_too_large, "loopless rate exceeds 2^62");
    }
    const std::uint64_t m = sample_poisson(rng, rate);
    if (m > 0) {
      const EdgeSampler sampler(norm);
      out.edges.reserve(m);
      for (std::uint64_t t = 0; t < m; ++t) {
        // Conditional distribution given I != J: redraw the whole tuple.
        Edge e = sampler.draw_edge(rng);
        std::uint64_t rejections = 0;
        while (e.src == e.dst) {
          if (++rejections > kMaxLoopRejections) {
            throw Error(Errc::rejection_stall,
                        "self-loop rejection exceeded 1e6 attempts");
          }
          e = sampler.draw_edge(rng);
        }
        out.edges.push_back(e);
      }
    }
  } else {
    const std::uint64_t m = sample_edge_count(norm, rng);
    if (m > 0) {
      const EdgeSampler sampler(norm);
      const BlockCounts counts = sample_block_counts(norm, m, rng);
      out.edges = blocked_edges(sampler, counts, rng, options.parallel_blocks,
                                options.seed);
    }
  }

  if (undirected) {
    out = symmetrize(out);
  }
  if (thresholded) {
    out = threshold(out);
  }
  return out;
}

}  // namespace fastrg
