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

#include "linalg.hpp"

#include <string>

#include "wqm/error.hpp"

namespace wqm::detail {

Eigen::VectorXd null_vector(const Eigen::MatrixXd& a, std::string_view what) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();  // descending
  const Eigen::Index n = sv.size();
  const double scale = sv(0) > 0.0 ? sv(0) : 1.0;
  constexpr double kNullTol = 1e-10;
  constexpr double kGapTol = 1e-8;
  if (sv(n - 1) > kNullTol * scale) {
    throw DegenerateSubspace(std::string(what) + ": no null vector (smallest singular value " +
                             std::to_string(sv(n - 1)) + ")");
  }
  if (n > 1 && sv(n - 2) < kGapTol * scale) {
    throw DegenerateSubspace(std::string(what) + ": null space is not one-dimensional");
  }
  return svd.matrixV().col(n - 1);
}

Eigen::MatrixXd autocorrelation_operator(std::span<const double> h, int r) {
  const int taps = static_cast<int>(h.size());
  const int dim = 2 * r + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = -r; n <= r; ++n) {
    for (int i = 0; i < taps; ++i) {
      for (int j = 0; j < taps; ++j) {
        const int m = 2 * n + j - i;
        if (m >= -r && m <= r) a(n + r, m + r) += h[i] * h[j];
      }
    }
  }
  return a;
}

}  // namespace wqm::detail
