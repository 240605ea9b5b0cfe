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

#include "fastrg/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

void check_entries(const Matrix& m, const char* name) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(Errc::empty_matrix, std::string(name) + " has zero extent");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) {
        throw Error(Errc::non_finite, std::string(name) + "(" +
                                          std::to_string(i) + "," +
                                          std::to_string(j) + ") is not finite");
      }
      if (v < 0.0) {
        throw Error(Errc::negative_entry, std::string(name) + "(" +
                                              std::to_string(i) + "," +
                                              std::to_string(j) + ") = " +
                                              std::to_string(v) + " < 0");
      }
    }
  }
}

}  // namespace

FactorModel FactorModel::with_scaled_s(double factor) const {
  Matrix scaled = s;
  for (std::size_t u = 0; u < scaled.rows(); ++u) {
    for (std::size_t v = 0; v < scaled.cols(); ++v) {
      scaled(u, v) *= factor;
    }
  }
  FactorModel out{x, std::move(scaled), y, square};
  return out;
}

FactorModel validate(Matrix x, Matrix s, Matrix y) {
  check_entries(x, "X");
  check_entries(s, "S");
  check_entries(y, "Y");
  if (x.cols() != s.rows()) {
    throw Error(Errc::dimension_mismatch,
                "cols(X) = " + std::to_string(x.cols()) +
                    " but rows(S) = " + std::to_string(s.rows()));
  }
  if (y.cols() != s.cols()) {
    throw Error(Errc::dimension_mismatch,
                "cols(Y) = " + std::to_string(y.cols()) +
                    " but cols(S) = " + std::to_string(s.cols()));
  }
  const bool square = x == y;
  return FactorModel{std::move(x), std::move(s), std::move(y), square};
}

FactorModel validate_square(Matrix x, Matrix s) {
  Matrix y = x;
  FactorModel model = validate(std::move(x), std::move(s), std::move(y));
  model.square = true;
  return model;
}

NormalizedModel normalize(const FactorModel& model) {
  const std::vector<double> cx = model.x.col_sums();
  const std::vector<double> cy =
      model.square ? cx : model.y.col_sums();

  NormalizedModel out;
  out.cx = cx;
  out.cy = cy;
  out.square = model.square;

  // Zero columns keep divisor 1; the matching Stilde row/column is zeroed
  // below so the category has draw probability 0 either way.
  out.xtilde = model.x;
  for (std::size_t u = 0; u < out.xtilde.cols(); ++u) {
    const double div = cx[u] == 0.0 ? 1.0 : cx[u];
    for (std::size_t i = 0; i < out.xtilde.rows(); ++i) {
      out.xtilde(i, u) /= div;
    }
  }
  if (model.square) {
    out.ytilde = out.xtilde;
  } else {
    out.ytilde = model.y;
    for (std::size_t v = 0; v < out.ytilde.cols(); ++v) {
      const double div = cy[v] == 0.0 ? 1.0 : cy[v];
      for (std::size_t j = 0; j < out.ytilde.rows(); ++j) {
        out.ytilde(j, v) /= div;
      }
    }
  }

  out.stilde = model.s;
  double total = 0.0;
  for (std::size_t u = 0; u < out.stilde.rows(); ++u) {
    for (std::size_t v = 0; v < out.stilde.cols(); ++v) {
      out.stilde(u, v) *= cx[u] * cy[v];
      total += out.stilde(u, v);
    }
  }
  out.lambda_total = total;
  return out;
}

double lambda(const FactorModel& model, std::size_t i, std::size_t j) {
  if (i >= model.n()) {
    throw Error(Errc::index_out_of_range,
                "row index " + std::to_string(i) + " >= n = " +
                    std::to_string(model.n()));
  }
  if (j >= model.d()) {
    throw Error(Errc::index_out_of_range,
                "column index " + std::to_string(j) + " >= d = " +
                    std::to_string(model.d()));
  }
  const auto xi = model.x.row(i);
  const auto yj = model.y.row(j);
  double acc = 0.0;
  for (std::size_t u = 0; u < model.kx(); ++u) {
    if (xi[u] == 0.0) continue;
    double inner = 0.0;
    for (std::size_t v = 0; v < model.ky(); ++v) {
      inner += model.s(u, v) * yj[v];
    }
    acc += xi[u] * inner;
  }
  return acc;
}

double expected_edge_count(const FactorModel& model) {
  const std::vector<double> cx = model.x.col_sums();
  const std::vector<double> cy =
      model.square ? cx : model.y.col_sums();
  double total = 0.0;
  for (std::size_t u = 0; u < model.kx(); ++u) {
    if (cx[u] == 0.0) continue;
    for (std::size_t v = 0; v < model.ky(); ++v) {
      total += cx[u] * model.s(u, v) * cy[v];
    }
  }
  return total;
}

FactorModel scale_to_avg_degree(const FactorModel& model, double avg_deg) {
  const double current = expected_edge_count(model);
  if (current <= 0.0) {
    throw Error(Errc::degenerate_model,
                "expected edge count is 0, cannot rescale");
  }
  const double factor =
      avg_deg * static_cast<double>(model.n()) / current;
  return model.with_scaled_s(factor);
}

double loopless_rate(const FactorModel& model) {
  if (!model.square) {
    throw Error(Errc::not_square, "loopless rate requires Y = X");
  }
  double diag = 0.0;
  for (std::size_t i = 0; i < model.n(); ++i) {
    diag += lambda(model, i, i);
  }
  const double rate = expected_edge_count(model) - diag;
  return rate < 0.0 ? 0.0 : rate;
}

}  // namespace fastrg
