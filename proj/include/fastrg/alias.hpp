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

#ifndef FASTRG_ALIAS_HPP_
#define FASTRG_ALIAS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fastrg/rng.hpp"

namespace fastrg {

// Walker/Vose alias table: O(n) build, O(1) draw over fixed non-negative
// weights. Immutable after build; concurrent draws are safe as long as each
// caller uses its own Rng.
class AliasTable {
 public:
  // Requires at least one strictly positive weight, all finite non-negative.
  // Throws Error{AllZeroWeights, NegativeWeight, NonFinite}.
  static AliasTable build(std::span<const double> weights);

  std::uint32_t draw(Rng& rng) const {
    const std::uint64_t bits = rng.next_u64();
    // Top 32 bits pick the bucket, full-width double picks the coin; one
    // next_u64 plus one next_double keeps stream use fixed per draw.
    std::size_t i = static_cast<std::size_t>(
        (static_cast<double>(bits >> 11) * 0x1.0p-53) *
        static_cast<double>(size_));
    if (i >= size_) i = size_ - 1;  // guard the u ~= 1 edge
    const double coin = rng.next_double();
    return coin < prob_[i] ? static_cast<std::uint32_t>(i) : alias_[i];
  }

  std::vector<std::uint32_t> draw_many(std::uint64_t count, Rng& rng) const;

  std::size_t size() const { return size_; }
  double total_weight() const { return total_weight_; }

  // Per-category probability implied by the table arithmetic. Used by the
  // construction-exactness check; O(size).
  std::vector<double> implied_probabilities() const;

 private:
  AliasTable() = default;

  std::size_t size_ = 0;
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
  double total_weight_ = 0.0;
};

}  // namespace fastrg

#endif  // FASTRG_ALIAS_HPP_
