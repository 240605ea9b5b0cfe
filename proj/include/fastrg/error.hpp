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

#ifndef FASTRG_ERROR_HPP
#define FASTRG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fastrg {

enum class Errc {
  negative_entry,
  dimension_mismatch,
  non_finite,
  empty_matrix,
  index_out_of_range,
  degenerate_model,
  not_square,
  model_too_large,
  all_zero_weights,
  negative_weight,
  rejection_stall,
  probability_out_of_range,
  label_out_of_range,
  non_positive_theta,
  simplex_violation,
  non_binary_entry,
  all_zero,
  unsupported_mean_function,
  probability_overflow,
  too_large,
  parse_error,
  io_error,
  resource_limit,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fastrg

#endif  // FASTRG_ERROR_HPP
