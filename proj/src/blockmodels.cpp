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

#include "fastrg/blockmodels.hpp"

#include <cmath>
#include <string>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

Matrix one_hot_rows(std::span<const std::uint32_t> memberships,
                    std::size_t k, std::span<const double> scale) {
  Matrix x(memberships.size(), k, 0.0);
  for (std::size_t i = 0; i < memberships.size(); ++i) {
    if (memberships[i] >= k) {
      throw Error(Errc::label_out_of_range,
                  "membership[" + std::to_string(i) + "] = " +
                      std::to_string(memberships[i]) + " but K = " +
                      std::to_string(k));
    }
    x(i, memberships[i]) = scale.empty() ? 1.0 : scale[i];
  }
  return x;
}

}  // namespace

Matrix bernoulli_log_transform(const Matrix& probabilities) {
  Matrix out = probabilities;
  for (std::size_t u = 0; u < out.rows(); ++u) {
    for (std::size_t v = 0; v < out.cols(); ++v) {
      const double p = out(u, v);
      if (!(p >= 0.0) || p >= 1.0) {
        throw Error(Errc::probability_out_of_range,
                    "B(" + std::to_string(u) + "," + std::to_string(v) +
                        ") = " + std::to_string(p) +
                        " outside [0, 1) for the Bernoulli transform");
      }
      // -log1p(-p) = -ln(1 - p), stable near 0.
      out(u, v) = -std::log1p(-p);
    }
  }
  return out;
}

FactorModel sbm_factors(std::span<const std::uint32_t> memberships,
                        const Matrix& b, bool bernoulli) {
  Matrix x = one_hot_rows(memberships, b.rows(), {});
  Matrix s = bernoulli ? bernoulli_log_transform(b) : b;
  return validate_square(std::move(x), std::move(s));
}

FactorModel dcsbm_factors(std::span<const std::uint32_t> memberships,
                          std::span<const double> theta, const Matrix& b) {
  if (theta.size() != memberships.size()) {
    throw Error(Errc::dimension_mismatch,
                "theta has " + std::to_string(theta.size()) +
                    " entries but memberships has " +
                    std::to_string(memberships.size()));
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(theta[i] > 0.0)) {
      throw Error(Errc::non_positive_theta,
                  "theta[" + std::to_string(i) + "] = " +
                      std::to_string(theta[i]) + " must be > 0");
    }
  }
  Matrix x = one_hot_rows(memberships, b.rows(), theta);
  return validate_square(std::move(x), b);
}

FactorModel mixed_membership_factors(const Matrix& pi, const Matrix& b) {
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    double row_sum = 0.0;
    for (std::size_t k = 0; k < pi.cols(); ++k) {
      row_sum += pi(i, k);
    }
    if (std::abs(row_sum - 1.0) > 1e-12) {
      throw Error(Errc::simplex_violation,
                  "row " + std::to_string(i) + " of Pi sums to " +
                      std::to_string(row_sum));
    }
  }
  return validate_square(pi, b);
}

FactorModel overlapping_factors(const Matrix& z, const Matrix& b) {
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t k = 0; k < z.cols(); ++k) {
      const double v = z(i, k);
      if (v != 0.0 && v != 1.0) {
        throw Error(Errc::non_binary_entry,
                    "Z(" + std::to_string(i) + "," + std::to_string(k) +
                        ") = " + std::to_string(v) + " is not 0 or 1");
      }
    }
  }
  return validate_square(z, b);
}

FactorModel chung_lu_factors(std::span<const double> weights) {
  bool any_positive = false;
  for (double w : weights) {
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw Error(Errc::all_zero, "all node weights are zero");
  }
  Matrix x(weights.size(), 1,
           std::vector<double>(weights.begin(), weights.end()));
  Matrix s(1, 1, 1.0);
  return validate_square(std::move(x), std::move(s));
}

bool is_sbm_shaped(const FactorModel& model) {
  if (!model.square) return false;
  for (std::size_t i = 0; i < model.n(); ++i) {
    std::size_t ones = 0;
    for (std::size_t k = 0; k < model.kx(); ++k) {
      const double v = model.x(i, k);
      if (v == 1.0) {
        ++ones;
      } else if (v != 0.0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> memberships_from_block_sizes(
    std::span<const std::size_t> sizes) {
  std::vector<std::uint32_t> out;
  for (std::size_t block = 0; block < sizes.size(); ++block) {
    if (sizes[block] == 0) {
      throw Error(Errc::empty_matrix,
                  "block " + std::to_string(block) + " has size 0");
    }
    out.insert(out.end(), sizes[block], static_cast<std::uint32_t>(block));
  }
  return out;
}

}  // namespace fastrg
