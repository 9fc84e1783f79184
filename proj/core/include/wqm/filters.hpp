// Copyright 2026 The wqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wqm {

/// Daubechies filter bank of order K: 2K scaling coefficients h and the
/// matching wavelet coefficients g_i = (-1)^i h_{2K-1-i}.
///
/// Only K in {1, 2, 3} has closed forms here. K = 1 is the Haar bank and is
/// accepted by the filter and cascade code but rejected anywhere a derivative
/// of the scaling function is needed.
class FilterBank {
 public:
  /// Builds a bank from arbitrary scaling coefficients (size must be even and
  /// non-zero); g is derived. No validation beyond the size check, so this is
  /// also how tests construct perturbed banks.
  static FilterBank from_coefficients(std::vector<double> h);

  int order() const { return static_cast<int>(h_.size() / 2); }
  std::size_t taps() const { return h_.size(); }

  std::span<const double> h() const { return h_; }
  std::span<const double> g() const { return g_; }
  double h(std::size_t i) const { return h_[i]; }
  double g(std::size_t i) const { return g_[i]; }

  /// Support of the scaling function is (0, 2K-1).
  int support_length() const { return 2 * order() - 1; }

  friend bool operator==(const FilterBank&, const FilterBank&) = default;

 private:
  explicit FilterBank(std::vector<double> h);

  std::vector<double> h_;
  std::vector<double> g_;
};

/// Closed-form Daubechies coefficients evaluated in double precision.
/// Throws UnsupportedOrder for K outside {1, 2, 3}.
FilterBank make_filter_bank(int order);

struct ShiftResidual {
  int shift;        // j in sum_i h_i h_{i-2j}
  double residual;  // |sum_i h_i h_{i-2j} - delta_{j0}|
};

/// Residuals of the normalization and shift-orthonormality identities.
struct FilterResiduals {
  double sum;  // |sum_i h_i - sqrt(2)|
  std::vector<ShiftResidual> orthonormality;

  double max() const;
};

FilterResiduals validate_filter_bank(const FilterBank& bank);

}  // namespace wqm
