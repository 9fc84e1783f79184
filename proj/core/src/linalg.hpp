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

#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace wqm::detail {

// Unit vector spanning the null space of `a`. Throws DegenerateSubspace when
// the null space is not one-dimensional, judged by the two smallest singular
// values relative to the largest.
Eigen::VectorXd null_vector(const Eigen::MatrixXd& a, std::string_view what);

// Autocorrelation-downsampling operator on shifts [-r, r]:
//   A(n, m) = sum_{i,j} h_i h_j [2n + j - i == m].
Eigen::MatrixXd autocorrelation_operator(std::span<const double> h, int r);

}  // namespace wqm::detail
