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

#include "fastrg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>

#include "fastrg/error.hpp"
#include "fastrg/rng.hpp"
#include "fastrg/sampler.hpp"

namespace fastrg {

namespace {

constexpr std::size_t kBenchRank = 5;
constexpr std::uint64_t kModelStreamTag = 0xbe4c;
constexpr std::uint64_t kSampleStreamTag = 0xbe5a;
constexpr const char* kModelKind = "poisson-k5";

struct GridPoint {
  std::size_t n;
  std::uint64_t expected_m;
  std::size_t index;  // position in grid order
};

std::vector<BenchRecord> run_point(const GridPoint& point,
                                   const BenchConfig& config) {
  const double avg_deg = static_cast<double>(point.expected_m) /
                         static_cast<double>(point.n);
  const FactorModel model = bench_model(
      point.n, avg_deg, derive_stream(config.seed, kModelStreamTag,
                                      point.index));
  const NormalizedModel norm = normalize(model);
  const EdgeSampler sampler(norm);

  std::vector<BenchRecord> records;
  records.reserve(config.reps);
  for (unsigned rep = 0; rep < config.reps; ++rep) {
    const std::uint64_t sample_seed = derive_stream(
        config.seed, kSampleStreamTag, point.index * 1024 + rep);
    Rng rng(sample_seed);

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t m = sample_edge_count(norm, rng);
    const BlockCounts counts = sample_block_counts(norm, m, rng);
    const EdgeList edges = sample_edges(sampler, counts, rng);
    const auto stop = std::chrono::steady_clock::now();

    BenchRecord record;
    record.n = point.n;
    record.expected_m = point.expected_m;
    record.actual_m = edges.edges.size();
    record.elapsed_seconds =
        std::chrono::duration<double>(stop - start).count();
    record.seed = sample_seed;
    record.model_kind = kModelKind;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

FactorModel bench_model(std::size_t n, double avg_deg, std::uint64_t seed) {
  Rng rng(seed);
  Matrix x(n, kBenchRank, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < kBenchRank; ++k) {
      x(i, k) = static_cast<double>(sample_poisson(rng, 1.0));
    }
  }
  Matrix s(kBenchRank, kBenchRank, 0.0);
  for (std::size_t u = 0; u < kBenchRank; ++u) {
    for (std::size_t v = 0; v < kBenchRank; ++v) {
      s(u, v) = rng.next_double();
    }
  }
  FactorModel model = validate_square(std::move(x), std::move(s));
  return scale_to_avg_degree(model, avg_deg);
}

void write_bench_csv_header(std::ostream& out) {
  out << "n,expected_m,actual_m,elapsed_seconds,seed,model_kind\n";
}

void write_bench_record(std::ostream& out, const BenchRecord& record) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof(elapsed), "%.9f", record.elapsed_seconds);
  out << record.n << ',' << record.expected_m << ',' << record.actual_m
      << ',' << elapsed << ',' << record.seed << ',' << record.model_kind
      << '\n';
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::ostream* csv_out) {
  std::vector<GridPoint> points;
  for (std::size_t n : config.n_grid) {
    for (std::uint64_t m : config.m_grid) {
      if (n * kBenchRank > config.max_elements) {
        throw Error(Errc::resource_limit,
                    "n = " + std::to_string(n) + " needs " +
                        std::to_string(n * kBenchRank) +
                        " factor entries, cap is " +
                        std::to_string(config.max_elements));
      }
      points.push_back(GridPoint{n, m, points.size()});
    }
  }

  std::vector<BenchRecord> all;
  all.reserve(points.size() * config.reps);
  if (config.reps == 0 || points.empty()) {
    return all;
  }
  if (csv_out != nullptr) {
    write_bench_csv_header(*csv_out);
  }

  if (!config.parallel_points) {
    for (const GridPoint& point : points) {
      for (BenchRecord& record : run_point(point, config)) {
        if (csv_out != nullptr) {
          write_bench_record(*csv_out, record);
        }
        all.push_back(std::move(record));
      }
    }
    return all;
  }

  // Opt-in parallel grid: points run concurrently (timings may contend),
  // output is still assembled and written in grid order.
  std::vector<std::vector<BenchRecord>> parts(points.size());
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers =
      std::min<std::size_t>(hw == 0 ? 1 : hw, points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= points.size()) return;
        try {
          parts[idx] = run_point(points[idx], config);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::vector<BenchRecord>& part : parts) {
    for (BenchRecord& record : part) {
      if (csv_out != nullptr) {
        write_bench_record(*csv_out, record);
      }
      all.push_back(std::move(record));
    }
  }
  return all;
}

}  // namespace fastrg
