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

#ifndef FASTRG_BENCH_HPP_
#define FASTRG_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fastrg/model.hpp"

namespace fastrg {

struct BenchRecord {
  std::size_t n = 0;
  std::uint64_t expected_m = 0;
  std::uint64_t actual_m = 0;
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;  // the derived per-rep sampling seed
  std::string model_kind;
};

struct BenchConfig {
  std::vector<std::size_t> n_grid;
  std::vector<std::uint64_t> m_grid;  // target expected edge counts
  unsigned reps = 3;
  std::uint64_t seed = 0;
  std::size_t max_elements = 100000000;  // cap on n * K per grid point
  bool parallel_points = false;          // never parallel within a timed region
};

// Scaling harness: for each (n, expected_m) grid point, builds a rank-5
// model with i.i.d. Poisson(1) factor entries and i.i.d. Uniform[0,1]
// mixing entries, rescales it to avg_deg = expected_m / n, and times edge
// generation for the directed multigraph with loops. The timed region
// covers the edge-count draw, the block multinomial, and the endpoint
// draws; model construction and table building are excluded. One record
// per rep, grid order. When csv_out is non-null, a header plus one CSV row
// per record goes there as results arrive. Throws Error{ResourceLimit}
// when a grid point needs more than max_elements factor entries.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::ostream* csv_out);

// Model of the scaling experiment, exposed for tests: n x 5 factor with
// i.i.d. Poisson(1) entries, 5 x 5 mixing with i.i.d. Uniform[0,1] entries,
// rescaled to the target average degree.
FactorModel bench_model(std::size_t n, double avg_deg, std::uint64_t seed);

void write_bench_csv_header(std::ostream& out);
void write_bench_record(std::ostream& out, const BenchRecord& record);

}  // namespace fastrg

#endif  // FASTRG_BENCH_HPP_
