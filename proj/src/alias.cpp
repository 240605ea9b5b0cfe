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

#include "fastrg/alias.hpp"

#include <cmath>
#include <limits>

#include "fastrg/error.hpp"

namespace fastrg {

AliasTable AliasTable::build(std::span<const double> weights) {
  if (weights.empty()) {
    throw Error(Errc::all_zero_weights, "alias table needs at least 1 weight");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw Error(Errc::non_finite, "alias weight is not finite");
    }
    if (w < 0.0) {
      throw Error(Errc::negative_weight, "alias weight is negative");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw Error(Errc::all_zero_weights, "alias weights sum to zero");
  }

  const std::size_t n = weights.size();
  AliasTable table;
  table.size_ = n;
  table.total_weight_ = total;
  table.prob_.assign(n, 1.0);
  table.alias_.resize(n);

  // Scaled weights: uniform threshold is exactly 1.
  std::vector<double> scaled(n);
  const double scale = static_cast<double>(n) / total;
  for (std::size_t k = 0; k < n; ++k) {
    scaled[k] = weights[k] * scale;
    table.alias_[k] = static_cast<std::uint32_t>(k);
  }

  // Two-worklist split. Entries within 1e-15 of the threshold go to the
  // large list so the partition is deterministic under rounding.
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (scaled[k] >= 1.0 - 1e-15) {
      large.push_back(static_cast<std::uint32_t>(k));
    } else {
      small.push_back(static_cast<std::uint32_t>(k));
    }
  }

  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    large.pop_back();
    table.prob_[s] = scaled[s];
    table.alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] >= 1.0 - 1e-15) {
      large.push_back(l);
    } else {
      small.push_back(l);
    }
  }
  // Leftovers in either list sit at the threshold up to rounding; they keep
  // prob = 1 and alias = self from initialization.

  return table;
}

std::vector<std::uint32_t> AliasTable::draw_many(std::uint64_t count,
                                                 Rng& rng) const {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(draw(rng));
  }
  return out;
}

std::vector<double> AliasTable::implied_probabilities() const {
  std::vector<double> p(size_, 0.0);
  const double bucket = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    p[i] += bucket * prob_[i];
    p[alias_[i]] += bucket * (1.0 - prob_[i]);
  }
  return p;
}

}  // namespace fastrg
