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

#ifndef FASTRG_BLOCKMODELS_HPP_
#define FASTRG_BLOCKMODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fastrg/matrix.hpp"
#include "fastrg/model.hpp"

namespace fastrg {

// Stochastic blockmodel: X is the n x K one-hot membership matrix, Y = X,
// S = B. With `bernoulli` set, S_kl = -ln(1 - B_kl), so the thresholded
// Poisson graph has exact edge probabilities B (requires B entries < 1).
// Throws Error{LabelOutOfRange, ProbabilityOutOfRange}.
FactorModel sbm_factors(std::span<const std::uint32_t> memberships,
                        const Matrix& b, bool bernoulli = false);

// Degree-corrected blockmodel: X row i = theta_i * e_{membership(i)}.
// Throws Error{LabelOutOfRange, NonPositiveTheta}.
FactorModel dcsbm_factors(std::span<const std::uint32_t> memberships,
                          std::span<const double> theta, const Matrix& b);

// Mixed-membership blockmodel: X = Pi with rows on the simplex within
// 1e-12. Throws Error{SimplexViolation}.
FactorModel mixed_membership_factors(const Matrix& pi, const Matrix& b);

// Overlapping blockmodel: X = Z with entries in {0, 1}. Throws
// Error{NonBinaryEntry}.
FactorModel overlapping_factors(const Matrix& z, const Matrix& b);

// Chung-Lu: X = weights as an n x 1 column, S = [[1]], so
// lambda_ij = w_i * w_j. All-equal weights give the Erdos-Renyi-type
// uniform-rate case. Throws Error{AllZero}.
FactorModel chung_lu_factors(std::span<const double> weights);

// S_kl = -ln(1 - S_kl) elementwise; requires entries in [0, 1). Exposed for
// callers that build X themselves. Throws Error{ProbabilityOutOfRange}.
Matrix bernoulli_log_transform(const Matrix& probabilities);

// True when every row of X is one-hot with unit value and Y = X, the shape
// the Bernoulli transform is exact for.
bool is_sbm_shaped(const FactorModel& model);

// Deterministic membership fill: block 0 first. sizes must be positive.
std::vector<std::uint32_t> memberships_from_block_sizes(
    std::span<const std::size_t> sizes);

}  // namespace fastrg

#endif  // FASTRG_BLOCKMODELS_HPP_
