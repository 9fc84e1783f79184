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
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wqm::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained SVG line chart with linear axes. Non-finite points are
/// skipped. Output depends only on the inputs.
std::string line_chart(std::span<const Series> series, const ChartLabels& labels);

/// Heat map of |entries| on a log color scale, with separator lines drawn
/// before the given row/column indices.
std::string heat_map(const Eigen::MatrixXd& entries, std::span<const std::size_t> separators,
                     const std::string& title);

}  // namespace wqm::cli
