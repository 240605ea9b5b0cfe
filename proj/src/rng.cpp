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

#include "fastrg/rng.hpp"

#include <cmath>
#include <cstdlib>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

constexpr double kLogFactorialTable[10] = {
    0.0,
    0.0,
    0.6931471805599453,
    1.791759469228055,
    3.1780538303479458,
    4.787491742782046,
    6.579251212010101,
    8.525161361065415,
    10.60460290274525,
    12.801827480081469,
};

// Stirling series correction: ln k! - [0.5 ln(2*pi) + (k+0.5) ln k - k].
// Four terms keep the relative error below 1e-13 for every k >= 10.
double stirling_tail(double k) {
  const double k2 = k * k;
  return (1.0 / 12.0 -
          (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * k2)) / k2) / k2) /
         k;
}

std::uint64_t poisson_inversion(Rng& rng, double mean) {
  // Valid for mean < ~30; exp(-mean) stays well above double underflow.
  const double p0 = std::exp(-mean);
  while (true) {
    double u = rng.next_double();
    double p = p0;
    double cumulative = p;
    std::uint64_t k = 0;
    bool accepted = u <= cumulative;
    while (!accepted) {
      ++k;
      p *= mean / static_cast<double>(k);
      cumulative += p;
      if (u <= cumulative) {
        accepted = true;
      } else if (k > 200) {
        // Float leak in the far tail; retry with a fresh uniform.
        break;
      }
    }
    if (accepted) return k;
  }
}

// Transformed rejection (PTRS). Requires mean >= 10.
std::uint64_t poisson_ptrs(Rng& rng, double mean) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  while (true) {
    const double u = rng.next_double() - 0.5;
    double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) {
      return static_cast<std::uint64_t>(kf);
    }
    if (kf < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    const auto k = static_cast<std::uint64_t>(kf);
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mean - mean - log_factorial(k);
    if (lhs <= rhs) {
      return k;
    }
  }
}

// Binomial by inversion; requires p <= 0.5 and trials*p < 10.
std::uint64_t binomial_inversion(Rng& rng, std::uint64_t trials, double p) {
  const double q = 1.0 - p;
  const double s = p / q;
  const double a = static_cast<double>(trials + 1) * s;
  const double r0 = std::exp(static_cast<double>(trials) * std::log(q));
  while (true) {
    double u = rng.next_double();
    double r = r0;
    std::uint64_t k = 0;
    bool accepted = u <= r;
    while (!accepted) {
      u -= r;
      ++k;
      if (k > trials) break;  // float leak past the support; retry
      r *= a / static_cast<double>(k) - s;
      accepted = u <= r;
    }
    if (accepted) return k;
  }
}

// Transformed rejection (BTRS). Requires p <= 0.5 and trials*p >= 10.
std::uint64_t binomial_btrs(Rng& rng, std::uint64_t trials, double p) {
  const double n = static_cast<double>(trials);
  const double spq = std::sqrt(n * p * (1.0 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double r = p / (1.0 - p);
  const double m = std::floor((n + 1.0) * p);

  // Correction term of the Stirling bound, tabulated for small arguments.
  const auto tail = [](double k) {
    static constexpr double kTable[10] = {
        0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
        0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
        0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
        0.00833056343336287,
    };
    if (k <= 9.0) return kTable[static_cast<int>(k)];
    const double kp1sq = (k + 1.0) * (k + 1.0);
    return (1.0 / 12.0 - (1.0 / 360.0 - 1.0 / (1260.0 * kp1sq)) / kp1sq) /
           (k + 1.0);
  };

  while (true) {
    const double u = rng.next_double() - 0.5;
    double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > n) {
      continue;
    }
    if (us >= 0.07 && v <= v_r) {
      return static_cast<std::uint64_t>(kf);
    }
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound =
        (m + 0.5) * std::log((m + 1.0) / (r * (n - m + 1.0))) +
        (n + 1.0) * std::log((n - m + 1.0) / (n - kf + 1.0)) +
        (kf + 0.5) * std::log(r * (n - kf + 1.0) / (kf + 1.0)) + tail(m) +
        tail(n - m) - tail(kf) - tail(n - kf);
    if (v <= bound) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace

double log_factorial(std::uint64_t k) {
  if (k < 10) return kLogFactorialTable[k];
  const double kd = static_cast<double>(k);
  return 0.9189385332046727 + (kd + 0.5) * std::log(kd) - kd +
         stirling_tail(kd);
}

std::uint64_t sample_poisson(Rng& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw Error(Errc::non_finite, "poisson mean must be finite and >= 0");
  }
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poisson_inversion(rng, mean);
  return poisson_ptrs(rng, mean);
}

std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p) {
  if (!std::isfinite(p)) {
    throw Error(Errc::non_finite, "binomial probability must be finite");
  }
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  if (p > 0.5) return trials - sample_binomial(rng, trials, 1.0 - p);
  if (static_cast<double>(trials) * p < 10.0) {
    return binomial_inversion(rng, trials, p);
  }
  return binomial_btrs(rng, trials, p);
}

std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t trials,
                                              std::span<const double> weights) {
  std::vector<std::uint64_t> counts(weights.size(), 0);
  if (trials == 0) return counts;

  // Suffix sums give each conditional probability exactly, with no drift
  // from repeated subtraction.
  std::vector<double> suffix(weights.size() + 1, 0.0);
  for (std::size_t i = weights.size(); i-- > 0;) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(Errc::negative_weight,
                  "multinomial weights must be finite and >= 0");
    }
    suffix[i] = w + suffix[i + 1];
  }
  if (suffix[0] <= 0.0) {
    throw Error(Errc::all_zero_weights,
                "multinomial weights sum to zero but trials > 0");
  }

  std::uint64_t remaining = trials;
  for (std::size_t i = 0; i < weights.size() && remaining > 0; ++i) {
    if (weights[i] <= 0.0) continue;
    if (weights[i] >= suffix[i]) {
      counts[i] = remaining;
      remaining = 0;
      break;
    }
    const double p = weights[i] / suffix[i];
    const std::uint64_t k = sample_binomial(rng, remaining, p);
    counts[i] = k;
    remaining -= k;
  }
  // Any remainder after the last positive weight belongs to it.
  if (remaining > 0) {
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (weights[i] > 0.0) {
        counts[i] += remaining;
        break;
      }
    }
  }
  return counts;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_finite: return "NonFinite";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::degenerate_model: return "DegenerateModel";
    case Errc::not_square: return "NotSquare";
    case Errc::model_too_large: return "ModelTooLarge";
    case Errc::all_zero_weights: return "AllZeroWeights";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::rejection_stall: return "RejectionStall";
    case Errc::probability_out_of_range: return "ProbabilityOutOfRange";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::non_positive_theta: return "NonPositiveTheta";
    case Errc::simplex_violation: return "SimplexViolation";
    case Errc::non_binary_entry: return "NonBinaryEntry";
    case Errc::all_zero: return "AllZero";
    case Errc::unsupported_mean_function: return "UnsupportedMeanFunction";
    case Errc::probability_overflow: return "ProbabilityOverflow";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::resource_limit: return "ResourceLimit";
  }
  return "UnknownError";
}

}  // namespace fastrg
