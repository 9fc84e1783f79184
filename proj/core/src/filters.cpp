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

#include "wqm/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wqm/error.hpp"

namespace wqm {

FilterBank::FilterBank(std::vector<double> h) : h_(std::move(h)), g_(h_.size()) {
  const std::size_t n = h_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    g_[i] = sign * h_[n - 1 - i];
  }
}

FilterBank FilterBank::from_coefficients(std::vector<double> h) {
  if (h.empty() || h.size() % 2 != 0) {
    throw InvalidArgument("filter bank needs an even, non-zero number of taps, got " +
                          std::to_string(h.size()));
  }
  return FilterBank(std::move(h));
}

FilterBank make_filter_bank(int order) {
  const double sqrt2 = std::numbers::sqrt2;
  switch (order) {
    case 1:
      return FilterBank::from_coefficients({1.0 / sqrt2, 1.0 / sqrt2});
    case 2: {
      const double r3 = std::sqrt(3.0);
      const double d = 4.0 * sqrt2;
      return FilterBank::from_coefficients(
          {(1.0 + r3) / d, (3.0 + r3) / d, (3.0 - r3) / d, (1.0 - r3) / d});
    }
    case 3: {
      const double r10 = std::sqrt(10.0);
      const double r = std::sqrt(5.0 + 2.0 * r10);
      const double d = 16.0 * sqrt2;
      return FilterBank::from_coefficients({
          (1.0 + r10 + r) / d,
          (5.0 + r10 + 3.0 * r) / d,
          (10.0 - 2.0 * r10 + 2.0 * r) / d,
          (10.0 - 2.0 * r10 - 2.0 * r) / d,
          (5.0 + r10 - 3.0 * r) / d,
          (1.0 + r10 - r) / d,
      });
    }
    default:
      throw UnsupportedOrder("Daubechies order K=" + std::to_string(order) +
                             " is not supported (expected 1, 2 or 3)");
  }
}

double FilterResiduals::max() const {
  double m = sum;
  for (const auto& r : orthonormality) m = std::max(m, r.residual);
  return m;
}

FilterResiduals validate_filter_bank(const FilterBank& bank) {
  const auto h = bank.h();
  const int n = static_cast<int>(h.size());

  FilterResiduals out;
  double total = 0.0;
  for (double v : h) total += v;
  out.sum = std::abs(total - std::numbers::sqrt2);

  // Shifts with any overlap: |2j| < 2K.
  const int max_shift = bank.order() - 1;
  for (int j = -max_shift; j <= max_shift; ++j) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const int k = i - 2 * j;
      if (k >= 0 && k < n) acc += h[i] * h[k];
    }
    const double expected = (j == 0) ? 1.0 : 0.0;
    out.orthonormality.push_back({j, std::abs(acc - expected)});
  }
  return out;
}

}  // namespace wqm
