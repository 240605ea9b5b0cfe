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

#ifndef FASTRG_MODEL_HPP_
#define FASTRG_MODEL_HPP_

#include <cstddef>
#include <vector>

#include "fastrg/matrix.hpp"

namespace fastrg {

// Factor triple (X, S, Y): E(A) = X S Y^T, all entries finite and >= 0.
// `square` marks Y as the same matrix as X (n == d), which unlocks the
// loopless and undirected sampling paths.
struct FactorModel {
  Matrix x;
  Matrix s;
  Matrix y;
  bool square = false;

  std::size_t n() const { return x.rows(); }
  std::size_t d() const { return y.rows(); }
  std::size_t kx() const { return s.rows(); }
  std::size_t ky() const { return s.cols(); }

  // Same model with S replaced; shape is revalidated by construction.
  FactorModel with_scaled_s(double factor) const;
};

// Preprocessing output: Xtilde columns sum to 1 (or are all zero),
// Stilde = C_X S C_Y, lambda_total = sum of Stilde.
struct NormalizedModel {
  Matrix xtilde;
  Matrix stilde;
  Matrix ytilde;
  std::vector<double> cx;  // column sums of X
  std::vector<double> cy;  // column sums of Y
  double lambda_total = 0.0;
  bool square = false;
};

// Gate for raw matrices. Throws Error{NegativeEntry, DimensionMismatch,
// NonFinite, EmptyMatrix}. When `square`, y is ignored and X is used for
// both sides (requires S square is NOT implied; S must be Kx x Kx only
// when cols match, which validate checks).
FactorModel validate(Matrix x, Matrix s, Matrix y);
FactorModel validate_square(Matrix x, Matrix s);

// Algorithm preprocessing. Zero columns of X/Y keep a divisor of 1 and get
// zeroed rows/columns in Stilde, so they can never be drawn.
NormalizedModel normalize(const FactorModel& model);

// lambda(i, j) = x_i^T S y_j. Throws Error{IndexOutOfRange}.
double lambda(const FactorModel& model, std::size_t i, std::size_t j);

// Sum of lambda over all (i, j) pairs, computed as cx^T S cy in O(Kx*Ky).
double expected_edge_count(const FactorModel& model);

// Rescales S so expected_edge_count / n == avg_deg (expected edges per node
// of the raw directed multigraph). Throws Error{DegenerateModel} when the
// current expected edge count is 0.
FactorModel scale_to_avg_degree(const FactorModel& model, double avg_deg);

// Poisson rate for the loopless draw: lambda_total minus the diagonal mass
// sum_i lambda(i, i), clamped at 0. Throws Error{NotSquare}.
double loopless_rate(const FactorModel& model);

}  // namespace fastrg

#endif  // FASTRG_MODEL_HPP_
