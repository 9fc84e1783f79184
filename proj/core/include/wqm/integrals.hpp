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

#include <array>
#include <vector>

#include "wqm/filters.hpp"

namespace wqm {

/// M_m = integral of x^m s(x) dx for m = 0 .. max_order. M_0 = 1.
struct MomentTable {
  std::vector<double> moments;

  int max_order() const { return static_cast<int>(moments.size()) - 1; }
  double operator[](int m) const { return moments[static_cast<std::size_t>(m)]; }
};

/// X^(m)_n = integral of x^m s(x) s(x - n) dx for m in {0, 1, 2} and
/// |n| <= 2K - 2. Zero outside that range (disjoint supports).
struct TwoPointMoments {
  static constexpr int kMaxPower = 2;

  int half_width = 0;
  std::array<std::vector<double>, kMaxPower + 1> table;

  double at(int power, long shift) const;
};

/// Gamma_n = integral of s'(x) s'(x - n) dx for |n| <= 2K - 2, zero outside.
struct ConnectionTable {
  int half_width = 0;
  std::vector<double> gamma;

  double at(long shift) const;
};

MomentTable scaling_moments(const FilterBank& bank, int max_order = 2);

/// Solves (I - 2^-m A) X^(m) = b_m for m = 1, 2, where A is the
/// autocorrelation-downsampling operator of h. Requires K >= 2.
TwoPointMoments two_point_moments(const FilterBank& bank);

/// Eigenvector of A for eigenvalue 1/4, normalized so sum_n n^2 Gamma_n = -2
/// and symmetrized. Requires K = 3.
ConnectionTable derivative_connection(const FilterBank& bank);

/// integral of q^2 s^k_p(q) s^k_r(q) dq
///   = 2^-2k [X2_{r-p} + 2p X1_{r-p} + p^2 delta_{pr}].
double single_scale_x2(const TwoPointMoments& x, long p, long r, int scale);

/// -1/2 integral of s^k_p (d^2/dq^2) s^k_r dq = 1/2 * 4^k * Gamma_{r-p}.
double single_scale_kinetic(const ConnectionTable& gamma, long p, long r, int scale);

/// Everything Hamiltonian assembly needs for one filter bank.
struct IntegralTables {
  FilterBank bank;
  MomentTable moments;
  TwoPointMoments two_point;
  ConnectionTable connection;

  /// Requires K = 3.
  static IntegralTables compute(const FilterBank& bank);

  int half_width() const { return two_point.half_width; }
};

}  // namespace wqm
