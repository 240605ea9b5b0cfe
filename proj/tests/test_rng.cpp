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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "fastrg/error.hpp"
#include "fastrg/rng.hpp"
#include "stat_test_utils.hpp"
#include "test_support.hpp"

using fastrg::Errc;
using fastrg::Rng;
using testsupport::error_code_of;

namespace {

constexpr double kPvalMin = 1e-3;

// Goodness-of-fit of integer draws against an exact pmf, with the mass
// below lo and above hi pooled into tail cells.
template <typename Pmf>
double pmf_gof(const std::vector<std::uint64_t>& draws, Pmf pmf,
               std::uint64_t lo, std::uint64_t hi) {
  const std::size_t head = lo > 0 ? 1 : 0;
  const std::size_t cells = head + static_cast<std::size_t>(hi - lo + 1) + 1;
  std::vector<double> expected(cells, 0.0);
  std::vector<std::uint64_t> observed(cells, 0);

  const double total = static_cast<double>(draws.size());
  double mass_head = 0.0;
  for (std::uint64_t k = 0; k < lo; ++k) mass_head += pmf(k);
  double mass_mid = 0.0;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    const double p = pmf(k);
    expected[head + static_cast<std::size_t>(k - lo)] = p * total;
    mass_mid += p;
  }
  if (lo > 0) expected[0] = mass_head * total;
  double tail = 1.0 - mass_head - mass_mid;
  if (tail < 0.0) tail = 0.0;
  expected.back() = tail * total;

  for (std::uint64_t d : draws) {
    std::size_t idx;
    if (d < lo) {
      idx = 0;
    } else if (d > hi) {
      idx = cells - 1;
    } else {
      idx = head + static_cast<std::size_t>(d - lo);
    }
    ++observed[idx];
  }
  return stattest::gof_pvalue(expected, observed);
}

double poisson_pmf(double mean, std::uint64_t k) {
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

double binomial_pmf(std::uint64_t n, double p, std::uint64_t k) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::exp(std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
                  std::lgamma(nd - kd + 1.0) + kd * std::log(p) +
                  (nd - kd) * std::log1p(-p));
}

}  // namespace

TEST_CASE("mix64 matches the splitmix64 reference outputs") {
  // Outputs of a splitmix64 stream started at state 0: mix64 of the k-th
  // pre-increment state must equal the k-th published output.
  CHECK(fastrg::mix64(0x0000000000000000ULL) == 0xe220a8397b1dcdafULL);
  CHECK(fastrg::mix64(0x9E3779B97F4A7C15ULL) == 0x6e789e6aa1b965f4ULL);
  CHECK(fastrg::mix64(0x3C6EF372FE94F82AULL) == 0x06c45d188009454fULL);
}

TEST_CASE("derive_stream matches pinned values and separates coordinates") {
  CHECK(fastrg::derive_stream(0, 0, 0) == 0x238275bc38fcbe91ULL);
  CHECK(fastrg::derive_stream(0, 0, 1) == 0x2f32a78496c67c60ULL);
  CHECK(fastrg::derive_stream(0, 1, 0) == 0x44e5b98100c67fb0ULL);
  CHECK(fastrg::derive_stream(7, 3, 11) == 0x6fc9f6dc4fdd3c43ULL);

  // Distinct coordinates produce distinct keys across a small grid.
  std::vector<std::uint64_t> keys;
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      keys.push_back(fastrg::derive_stream(42, a, b));
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      CHECK(keys[i] != keys[j]);
    }
  }
}

TEST_CASE("Rng reproduces the xoshiro256++ stream for pinned seeds") {
  const struct {
    std::uint64_t seed;
    std::uint64_t expect[6];
  } cases[] = {
      {0x0ULL,
       {0x53175d61490b23dfULL, 0x61da6f3dc380d507ULL, 0x5c0fdf91ec9a7bfcULL,
        0x02eebf8c3bbe5e1aULL, 0x7eca04ebaf4a5eeaULL, 0x0543c37757f08d9aULL}},
      {0x1ULL,
       {0xcfc5d07f6f03c29bULL, 0xbf424132963fe08dULL, 0x19a37d5757aaf520ULL,
        0xbf08119f05cd56d6ULL, 0x2f47184b86186fa4ULL, 0x97299fcae7202345ULL}},
      {0x2aULL,
       {0xd0764d4f4476689fULL, 0x519e4174576f3791ULL, 0xfbe07cfb0c24ed8cULL,
        0xb37d9f600cd835b8ULL, 0xcb231c3874846a73ULL, 0x968d9f004e50de7dULL}},
      {0xDEADBEEFULL,
       {0x0c520eb8fea98edeULL, 0x2b74a6338b80e0e2ULL, 0xbe238770c3795322ULL,
        0x5f235f98a244ea97ULL, 0xe004f0cc1514d858ULL, 0x436a209963ff9223ULL}},
  };
  for (const auto& c : cases) {
    Rng rng(c.seed);
    for (std::uint64_t want : c.expect) {
      CHECK(rng.next_u64() == want);
    }
  }
}

TEST_CASE("next_double is uniform on [0, 1) with pinned leading values") {
  Rng rng(42);
  CHECK(rng.next_double() == 0.8143051451229099);
  CHECK(rng.next_double() == 0.3188210400616611);
  CHECK(rng.next_double() == 0.9838941681774888);
  CHECK(rng.next_double() == 0.7011355981347556);

  Rng rng2(123);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double d = rng2.next_double();
    REQUIRE(d >= 0.0);
    REQUIRE(d < 1.0);
    sum += d;
  }
  // Mean of 1e5 uniforms: SE = sqrt(1/12/1e5) ~ 0.00091.
  CHECK(std::abs(sum / 100000.0 - 0.5) < 0.005);
}

TEST_CASE("identical seeds give identical streams, different seeds diverge") {
  Rng a(9001);
  Rng b(9001);
  Rng c(9002);
  bool all_equal_ac = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    if (va != c.next_u64()) all_equal_ac = false;
  }
  CHECK(!all_equal_ac);
}

TEST_CASE("sample_poisson handles zero mean and rejects invalid means") {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    CHECK(fastrg::sample_poisson(rng, 0.0) == 0);
  }
  CHECK(error_code_of([&] { fastrg::sample_poisson(rng, -1.0); }) ==
        Errc::non_finite);
  CHECK(error_code_of([&] {
          fastrg::sample_poisson(rng, std::numeric_limits<double>::quiet_NaN());
        }) == Errc::non_finite);
  CHECK(error_code_of([&] {
          fastrg::sample_poisson(rng, std::numeric_limits<double>::infinity());
        }) == Errc::non_finite);
}

TEST_CASE("sample_poisson inversion regime matches the exact pmf") {
  const double mean = 3.5;
  Rng rng(20240501);
  std::vector<std::uint64_t> draws(1000000);
  for (auto& d : draws) d = fastrg::sample_poisson(rng, mean);
  const double p = pmf_gof(
      draws, [&](std::uint64_t k) { return poisson_pmf(mean, k); }, 0, 13);
  CHECK_MESSAGE(p > kPvalMin, "poisson(3.5) gof p = ", p);
}

TEST_CASE("sample_poisson rejection regime matches the exact pmf") {
  const double mean = 40.0;
  Rng rng(77);
  std::vector<std::uint64_t> draws(300000);
  for (auto& d : draws) d = fastrg::sample_poisson(rng, mean);
  const double p = pmf_gof(
      draws, [&](std::uint64_t k) { return poisson_pmf(mean, k); }, 18, 66);
  CHECK_MESSAGE(p > kPvalMin, "poisson(40) gof p = ", p);
}

TEST_CASE("sample_poisson is consistent across the algorithm switch") {
  // Means straddling the inversion/rejection split must agree with the
  // distribution's analytic mean and variance.
  for (double mean : {9.999, 10.0}) {
    Rng rng(555);
    const int n = 200000;
    std::vector<double> xs(n);
    for (auto& x : xs) {
      x = static_cast<double>(fastrg::sample_poisson(rng, mean));
    }
    const auto mv = stattest::mean_variance(xs);
    const double se_mean = std::sqrt(mean / n);
    // Var of the sample variance for Poisson is ~ (mean + 2*mean^2)/n.
    const double se_var = std::sqrt((mean + 2.0 * mean * mean) / n);
    CHECK_MESSAGE(std::abs(mv.mean - mean) < 4.5 * se_mean, "mean=", mv.mean,
                  " target=", mean);
    CHECK_MESSAGE(std::abs(mv.variance - mean) < 6.0 * se_var,
                  "variance=", mv.variance, " target=", mean);
  }
}

TEST_CASE("sample_binomial handles degenerate inputs") {
  Rng rng(3);
  CHECK(fastrg::sample_binomial(rng, 0, 0.5) == 0);
  CHECK(fastrg::sample_binomial(rng, 100, 0.0) == 0);
  CHECK(fastrg::sample_binomial(rng, 100, -0.25) == 0);
  CHECK(fastrg::sample_binomial(rng, 100, 1.0) == 100);
  CHECK(fastrg::sample_binomial(rng, 100, 1.5) == 100);
  CHECK(error_code_of([&] {
          fastrg::sample_binomial(rng, 10,
                                  std::numeric_limits<double>::quiet_NaN());
        }) == Errc::non_finite);
}

TEST_CASE("sample_binomial inversion regime matches the exact pmf") {
  const std::uint64_t n = 20;
  const double p = 0.3;
  Rng rng(8675309);
  std::vector<std::uint64_t> draws(1000000);
  for (auto& d : draws) d = fastrg::sample_binomial(rng, n, p);
  for (std::uint64_t d : draws) REQUIRE(d <= n);
  const double pv = pmf_gof(
      draws, [&](std::uint64_t k) { return binomial_pmf(n, p, k); }, 0, 14);
  CHECK_MESSAGE(pv > kPvalMin, "binomial(20, 0.3) gof p = ", pv);
}

TEST_CASE("sample_binomial rejection regime matches the exact pmf") {
  const std::uint64_t n = 200;
  const double p = 0.4;
  Rng rng(31337);
  std::vector<std::uint64_t> draws(300000);
  for (auto& d : draws) d = fastrg::sample_binomial(rng, n, p);
  for (std::uint64_t d : draws) REQUIRE(d <= n);
  const double pv = pmf_gof(
      draws, [&](std::uint64_t k) { return binomial_pmf(n, p, k); }, 52, 108);
  CHECK_MESSAGE(pv > kPvalMin, "binomial(200, 0.4) gof p = ", pv);
}

TEST_CASE("sample_binomial reflection handles p above one half") {
  const std::uint64_t n = 50;
  const double p = 0.9;
  Rng rng(2718);
  std::vector<std::uint64_t> draws(200000);
  for (auto& d : draws) d = fastrg::sample_binomial(rng, n, p);
  for (std::uint64_t d : draws) REQUIRE(d <= n);
  const double pv = pmf_gof(
      draws, [&](std::uint64_t k) { return binomial_pmf(n, p, k); }, 38, 50);
  CHECK_MESSAGE(pv > kPvalMin, "binomial(50, 0.9) gof p = ", pv);
}

TEST_CASE("sample_multinomial conserves trials and respects zero weights") {
  Rng rng(13);
  const std::vector<double> weights = {1.0, 0.0, 3.0};
  for (int iter = 0; iter < 2000; ++iter) {
    const std::uint64_t trials = 1 + (rng.next_u64() % 100);
    const auto counts = fastrg::sample_multinomial(rng, trials, weights);
    REQUIRE(counts.size() == 3);
    CHECK(counts[1] == 0);
    CHECK(counts[0] + counts[1] + counts[2] == trials);
  }

  // Leading zeros: whole allocation lands on the only positive weight.
  const std::vector<double> only_last = {0.0, 0.0, 4.0};
  auto counts = fastrg::sample_multinomial(rng, 17, only_last);
  CHECK(counts == std::vector<std::uint64_t>{0, 0, 17});

  // Trailing zeros: the first weight absorbs everything deterministically.
  const std::vector<double> only_first = {3.0, 0.0};
  counts = fastrg::sample_multinomial(rng, 9, only_first);
  CHECK(counts == std::vector<std::uint64_t>{9, 0});
}

TEST_CASE("sample_multinomial pooled counts match the weight proportions") {
  Rng rng(424242);
  const std::vector<double> weights = {2.0, 1.0, 5.0};
  const std::uint64_t per_draw = 7;
  const int reps = 200000;
  std::vector<std::uint64_t> pooled(3, 0);
  for (int i = 0; i < reps; ++i) {
    const auto counts = fastrg::sample_multinomial(rng, per_draw, weights);
    for (int k = 0; k < 3; ++k) pooled[k] += counts[k];
  }
  // Sums of independent multinomials pool into one big multinomial, so a
  // plain gof against the weight proportions is exact.
  const double total = static_cast<double>(per_draw) * reps;
  const std::vector<double> expected = {total * 0.25, total * 0.125,
                                        total * 0.625};
  const double pv = stattest::gof_pvalue(expected, pooled);
  CHECK_MESSAGE(pv > kPvalMin, "multinomial pooled gof p = ", pv);
}

TEST_CASE("sample_multinomial validates weights") {
  Rng rng(5);
  const std::vector<double> negative = {1.0, -0.5};
  CHECK(error_code_of([&] { fastrg::sample_multinomial(rng, 3, negative); }) ==
        Errc::negative_weight);
  const std::vector<double> nan_w = {1.0,
                                     std::numeric_limits<double>::quiet_NaN()};
  CHECK(error_code_of([&] { fastrg::sample_multinomial(rng, 3, nan_w); }) ==
        Errc::negative_weight);
  const std::vector<double> zeros = {0.0, 0.0};
  CHECK(error_code_of([&] { fastrg::sample_multinomial(rng, 3, zeros); }) ==
        Errc::all_zero_weights);

  // Zero trials never touch the weights, even degenerate ones.
  CHECK(fastrg::sample_multinomial(rng, 0, zeros) ==
        std::vector<std::uint64_t>{0, 0});
  CHECK(fastrg::sample_multinomial(rng, 0, std::vector<double>{}).empty());
}

TEST_CASE("sample_multinomial is deterministic under a fixed stream") {
  const std::vector<double> weights = {0.5, 1.5, 2.0, 0.25};
  Rng a(777);
  Rng b(777);
  for (int i = 0; i < 50; ++i) {
    CHECK(fastrg::sample_multinomial(a, 1000, weights) ==
          fastrg::sample_multinomial(b, 1000, weights));
  }
}

TEST_CASE("log_factorial is exact for small k and tight for large k") {
  // Exact references: accumulate ln i directly.
  double acc = 0.0;
  for (std::uint64_t k = 0; k <= 9; ++k) {
    if (k > 0) acc += std::log(static_cast<double>(k));
    CHECK(fastrg::log_factorial(k) == doctest::Approx(acc).epsilon(1e-15));
  }
  for (std::uint64_t k :
       {10ULL, 57ULL, 100ULL, 1234ULL, 1000000ULL, 1000000000ULL}) {
    const double want = std::lgamma(static_cast<double>(k) + 1.0);
    CHECK(fastrg::log_factorial(k) == doctest::Approx(want).epsilon(1e-12));
  }
}
