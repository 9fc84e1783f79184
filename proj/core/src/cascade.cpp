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

#include "wqm/cascade.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "linalg.hpp"
#include "wqm/error.hpp"

namespace wqm {

double DyadicFunction::spacing() const { return std::ldexp(1.0, -depth); }

double DyadicFunction::x(std::size_t i) const {
  return std::ldexp(static_cast<double>(first + static_cast<long>(i)), -depth);
}

double DyadicFunction::at(long j) const {
  if (j < first || j > last()) return 0.0;
  return values[static_cast<std::size_t>(j - first)];
}

double DyadicFunction::riemann_sum() const {
  double acc = 0.0;
  for (double v : values) acc += v;
  return acc * spacing();
}

namespace {

void require_smooth_enough(const FilterBank& bank, const char* what) {
  if (bank.order() < 2) {
    throw UnsupportedOrder(std::string(what) + " requires K >= 2, got K=" +
                           std::to_string(bank.order()));
  }
}

void require_depth(int depth) {
  if (depth < 0) throw InvalidArgument("dyadic depth must be non-negative");
  if (depth > 24) throw InvalidArgument("dyadic depth above 24 is not supported");
}

}  // namespace

std::vector<double> scaling_values_at_integers(const FilterBank& bank) {
  require_smooth_enough(bank, "scaling_values_at_integers");
  const auto h = bank.h();
  const int taps = static_cast<int>(h.size());
  const int dim = taps - 2;  // interior integers 1 .. 2K-2

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int m = 1; m <= dim; ++m) {
    for (int n = 1; n <= dim; ++n) {
      const int i = 2 * m - n;
      if (i >= 0 && i < taps) a(m - 1, n - 1) = std::numbers::sqrt2 * h[i];
    }
  }
  a -= Eigen::MatrixXd::Identity(dim, dim);
  Eigen::VectorXd v = detail::null_vector(a, "scaling function at integers");
  v /= v.sum();
  return {v.data(), v.data() + v.size()};
}

DyadicFunction refine_scaling(const FilterBank& bank, int depth) {
  require_depth(depth);
  const std::vector<double> interior = scaling_values_at_integers(bank);
  const auto h = bank.h();
  const long taps = static_cast<long>(h.size());
  const long support = bank.support_length();

  DyadicFunction f;
  f.depth = 0;
  f.values.reserve(static_cast<std::size_t>(support + 1));
  f.values.push_back(0.0);
  f.values.insert(f.values.end(), interior.begin(), interior.end());
  f.values.push_back(0.0);

  for (int d = 1; d <= depth; ++d) {
    const long half = 1L << (d - 1);  // shift of one integer on the previous grid
    const long count = support * (1L << d) + 1;
    std::vector<double> next(static_cast<std::size_t>(count), 0.0);
    for (long j = 0; j < count; ++j) {
      if (j % 2 == 0) {
        next[j] = f.values[j / 2];
        continue;
      }
      double acc = 0.0;
      for (long i = 0; i < taps; ++i) acc += h[i] * f.at(j - i * half);
      next[j] = std::numbers::sqrt2 * acc;
    }
    f.depth = d;
    f.values = std::move(next);
  }
  return f;
}

DyadicFunction refine_wavelet(const FilterBank& bank, int depth) {
  const DyadicFunction s = refine_scaling(bank, depth);
  const auto g = bank.g();
  const long taps = static_cast<long>(g.size());
  const long unit = 1L << depth;

  DyadicFunction w;
  w.depth = depth;
  w.values.assign(s.values.size(), 0.0);
  for (long j = 0; j < static_cast<long>(w.values.size()); ++j) {
    double acc = 0.0;
    for (long i = 0; i < taps; ++i) acc += g[i] * s.at(2 * j - i * unit);
    w.values[j] = std::numbers::sqrt2 * acc;
  }
  return w;
}

DyadicFunction sample_element(const BasisElement& element, const FilterBank& bank, int depth) {
  if (depth < element.scale) {
    throw InvalidArgument("sampling " + to_string(element) + " needs depth >= " +
                          std::to_string(element.scale));
  }
  if (element.scale < 0) {
    throw InvalidArgument("sample_element supports non-negative scales only");
  }
  const int unit_depth = depth - element.scale;
  DyadicFunction f = element.kind == ElementKind::Scaling ? refine_scaling(bank, unit_depth)
                                                          : refine_wavelet(bank, unit_depth);
  // s(2^k x - n) on the depth-J grid is the unit function on the depth-(J-k)
  // grid shifted by n * 2^(J-k) samples.
  const double amplitude = std::sqrt(std::ldexp(1.0, element.scale));
  for (double& v : f.values) v *= amplitude;
  f.depth = depth;
  f.first = element.translation * (1L << unit_depth);
  return f;
}

}  // namespace wqm
