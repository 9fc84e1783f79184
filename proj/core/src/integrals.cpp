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

#include "wqm/integrals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "linalg.hpp"
#include "wqm/error.hpp"

namespace wqm {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sum_i h_i i^p.
double filter_moment(std::span<const double> h, int p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) acc += h[i] * std::pow(static_cast<double>(i), p);
  return acc;
}

double lookup(const std::vector<double>& table, int half_width, long shift) {
  if (shift < -half_width || shift > half_width) return 0.0;
  return table[static_cast<std::size_t>(shift + half_width)];
}

}  // namespace

double TwoPointMoments::at(int power, long shift) const {
  return lookup(table[static_cast<std::size_t>(power)], half_width, shift);
}

double ConnectionTable::at(long shift) const { return lookup(gamma, half_width, shift); }

MomentTable scaling_moments(const FilterBank& bank, int max_order) {
  if (bank.order() < 2) {
    throw UnsupportedOrder("scaling_moments requires K >= 2, got K=" +
                           std::to_string(bank.order()));
  }
  if (max_order < 0) throw InvalidArgument("moment order must be non-negative");
  const auto h = bank.h();
  MomentTable t;
  t.moments.push_back(1.0);
  for (int m = 1; m <= max_order; ++m) {
    double acc = 0.0;
    for (int l = 0; l < m; ++l) acc += binomial(m, l) * filter_moment(h, m - l) * t.moments[l];
    const double scale = std::ldexp(1.0, -m);
    t.moments.push_back(scale / std::numbers::sqrt2 * acc / (1.0 - scale));
  }
  return t;
}

TwoPointMoments two_point_moments(const FilterBank& bank) {
  if (bank.order() < 2) {
    throw UnsupportedOrder("two_point_moments requires K >= 2, got K=" +
                           std::to_string(bank.order()));
  }
  const auto h = bank.h();
  const int taps = static_cast<int>(h.size());
  const int r = taps - 2;
  const int dim = 2 * r + 1;
  const Eigen::MatrixXd a = detail::autocorrelation_operator(h, r);

  TwoPointMoments x;
  x.half_width = r;
  x.table[0].assign(dim, 0.0);
  x.table[0][r] = 1.0;

  for (int m = 1; m <= TwoPointMoments::kMaxPower; ++m) {
    const double scale = std::ldexp(1.0, -m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    for (int n = -r; n <= r; ++n) {
      double acc = 0.0;
      for (int i = 0; i < taps; ++i) {
        for (int j = 0; j < taps; ++j) {
          const long shift = 2L * n + j - i;
          for (int l = 0; l < m; ++l) {
            acc += h[i] * h[j] * binomial(m, l) * std::pow(static_cast<double>(i), m - l) *
                   x.at(l, shift);
          }
        }
      }
      rhs(n + r) = scale * acc;
    }
    const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(dim, dim) - scale * a;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);
    if (!lu.isInvertible()) {
      throw SingularSystem("two-point moment system is singular for power " + std::to_string(m));
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    x.table[m].assign(sol.data(), sol.data() + dim);
  }
  return x;
}

ConnectionTable derivative_connection(const FilterBank& bank) {
  if (bank.order() != 3) {
    throw UnsupportedOrder("derivative connection coefficients require K=3 (once-differentiable "
                           "scaling function), got K=" + std::to_string(bank.order()));
  }
  const auto h = bank.h();
  const int r = static_cast<int>(h.size()) - 2;
  const int dim = 2 * r + 1;
  Eigen::MatrixXd a = detail::autocorrelation_operator(h, r);
  a -= 0.25 * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::VectorXd v = detail::null_vector(a, "derivative connection coefficients");

  double second = 0.0;
  for (int n = -r; n <= r; ++n) second += static_cast<double>(n) * n * v(n + r);
  v *= -2.0 / second;

  ConnectionTable c;
  c.half_width = r;
  c.gamma.resize(dim);
  for (int n = -r; n <= r; ++n) c.gamma[n + r] = 0.5 * (v(n + r) + v(r - n));
  return c;
}

double single_scale_x2(const TwoPointMoments& x, long p, long r, int scale) {
  const long d = r - p;
  if (d < -x.half_width || d > x.half_width) return 0.0;
  const double pd = static_cast<double>(p);
  const double value = x.at(2, d) + 2.0 * pd * x.at(1, d) + pd * pd * x.at(0, d);
  return std::ldexp(value, -2 * scale);
}

double single_scale_kinetic(const ConnectionTable& gamma, long p, long r, int scale) {
  return 0.5 * std::ldexp(gamma.at(r - p), 2 * scale);
}

IntegralTables IntegralTables::compute(const FilterBank& bank) {
  ConnectionTable connection = derivative_connection(bank);
  return IntegralTables{bank, scaling_moments(bank), two_point_moments(bank),
                        std::move(connection)};
}

}  // namespace wqm
