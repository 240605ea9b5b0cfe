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

#include "fastrg/oracle.hpp"

#include <cmath>
#include <string>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

constexpr double kMaxCells = 1e8;

void check_size(const FactorModel& model) {
  if (static_cast<double>(model.n()) * static_cast<double>(model.d()) >
      kMaxCells) {
    throw Error(Errc::too_large,
                "dense oracle limited to 1e8 cells, got " +
                    std::to_string(model.n()) + " x " +
                    std::to_string(model.d()));
  }
}

}  // namespace

std::vector<std::uint64_t> dense_poisson_sample(const FactorModel& model,
                                                Rng& rng) {
  check_size(model);
  const std::size_t n = model.n();
  const std::size_t d = model.d();
  std::vector<std::uint64_t> a(n * d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double rate = lambda(model, i, j);
      if (rate > 0.0) {
        a[i * d + j] = sample_poisson(rng, rate);
      }
    }
  }
  return a;
}

CoupledPair coupled_pair(const FactorModel& model, Rng& rng,
                         bool upper_triangle_only) {
  check_size(model);
  CoupledPair out;
  out.n = model.n();
  out.d = model.d();
  out.thresholded.assign(out.n * out.d, 0);
  out.bernoulli.assign(out.n * out.d, 0);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.d; ++j) {
      if (upper_triangle_only && j < i) continue;
      const double rate = lambda(model, i, j);
      if (rate > 1.0) {
        throw Error(Errc::probability_overflow,
                    "lambda(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + std::to_string(rate) +
                        " > 1, not a Bernoulli probability");
      }
      const double u = rng.next_double();
      ++out.uniforms_consumed;
      // -expm1(-rate) = 1 - e^-rate <= rate, so thresholded <= bernoulli
      // cell by cell on the shared uniform.
      out.thresholded[i * out.d + j] = u < -std::expm1(-rate) ? 1 : 0;
      out.bernoulli[i * out.d + j] = u < rate ? 1 : 0;
    }
  }
  return out;
}

double discrepancy_expectation(const FactorModel& model) {
  double total = 0.0;
  for (std::size_t i = 0; i < model.n(); ++i) {
    for (std::size_t j = 0; j < model.d(); ++j) {
      const double rate = lambda(model, i, j);
      // rate - (1 - e^-rate) = rate + expm1(-rate), stable for tiny rates.
      total += rate + std::expm1(-rate);
    }
  }
  return total < 0.0 ? 0.0 : total;
}

}  // namespace fastrg
