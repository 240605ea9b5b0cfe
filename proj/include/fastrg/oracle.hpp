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

#ifndef FASTRG_ORACLE_HPP_
#define FASTRG_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "fastrg/model.hpp"
#include "fastrg/rng.hpp"

namespace fastrg {

// Dense count matrix with independent entries A_ij ~ Poisson(lambda_ij).
// Quadratic-time ground truth for validating the fast sampler; guarded at
// n * d <= 1e8 cells. Throws Error{TooLarge}.
std::vector<std::uint64_t> dense_poisson_sample(const FactorModel& model,
                                                Rng& rng);

// Two binary n x d matrices built on shared per-cell uniforms:
//   thresholded_ij = 1  iff  U_ij < 1 - exp(-lambda_ij)
//   bernoulli_ij   = 1  iff  U_ij < lambda_ij
// so the marginals are Bernoulli(1 - e^-lambda) and Bernoulli(lambda), the
// first matrix never exceeds the second, and the cells disagree with
// probability lambda - (1 - e^-lambda).
struct CoupledPair {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::uint8_t> thresholded;
  std::vector<std::uint8_t> bernoulli;
  std::uint64_t uniforms_consumed = 0;
};

// One uniform per ordered cell; with upper_triangle_only, only cells with
// i <= j are coupled (the rest stay 0), for undirected comparisons.
// Requires every lambda_ij <= 1 for the Bernoulli side; throws
// Error{ProbabilityOverflow, TooLarge}.
CoupledPair coupled_pair(const FactorModel& model, Rng& rng,
                         bool upper_triangle_only = false);

// Sum over cells of lambda - (1 - e^-lambda), evaluated with expm1 so tiny
// rates do not cancel. Equals E of the squared Frobenius distance between
// the two coupled matrices.
double discrepancy_expectation(const FactorModel& model);

}  // namespace fastrg

#endif  // FASTRG_ORACLE_HPP_
