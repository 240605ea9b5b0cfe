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

#ifndef FASTRG_RNG_HPP
#define FASTRG_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fastrg {

/// splitmix64 finalizer. Used for state expansion and stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// The project-wide random stream: xoshiro256++ seeded by running splitmix64
/// over the 64-bit seed. All sampling in the library consumes variates from
/// this generator only, so a seed pins every result bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) {
      sm += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

/// Deterministic substream key for (seed, a, b). Feeding the result to
/// Rng{} yields a stream independent of Rng{seed} and of any other (a, b).
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                                      std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

/// Poisson variate. Sequential inversion below mean 10, transformed
/// rejection (Hormann's PTRS) at and above it.
std::uint64_t sample_poisson(Rng& rng, double mean);

/// Binomial variate on `trials` trials with success probability `p`.
/// Inversion when trials*min(p,1-p) < 10, Hormann's BTRS otherwise.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p);

/// Multinomial allocation of `trials` balls over `weights` (non-negative,
/// not all zero unless trials == 0), by sequential binomial conditioning in
/// index order. Cell probabilities use exact suffix sums of the weights.
std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t trials,
                                              std::span<const double> weights);

/// ln(k!) to double precision: exact table through 9!, Stirling series after.
double log_factorial(std::uint64_t k);

}  // namespace fastrg

#endif  // FASTRG_RNG_HPP
