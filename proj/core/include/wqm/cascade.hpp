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
#include <vector>

#include "wqm/basis.hpp"
#include "wqm/filters.hpp"

namespace wqm {

/// Samples of a compactly supported function on the dyadic grid
/// x_j = j * 2^-depth, for j = first, first + 1, ..., first + values.size() - 1.
/// The first and last samples sit on the support boundary and are zero.
struct DyadicFunction {
  int depth = 0;
  long first = 0;
  std::vector<double> values;

  double spacing() const;
  double x(std::size_t i) const;
  double support_begin() const { return x(0); }
  double support_end() const { return x(values.size() - 1); }
  long last() const { return first + static_cast<long>(values.size()) - 1; }

  /// Value at absolute grid index j; zero outside the stored range.
  double at(long j) const;

  /// sum(values) * spacing. Equals the trapezoid rule since the endpoints vanish.
  double riemann_sum() const;
};

/// s(1), ..., s(2K-2): the eigenvector of A(m, n) = sqrt(2) h_{2m-n} for
/// eigenvalue 1, normalized to sum to one. Requires K >= 2.
std::vector<double> scaling_values_at_integers(const FilterBank& bank);

/// s on the dyadic grid of the given depth over [0, 2K-1], filled level by
/// level with s(x) = sqrt(2) * sum_i h_i s(2x - i). Points already present at a
/// coarser level are copied unchanged, so the table satisfies the two-scale
/// relation bit-for-bit at every non-integer dyadic point.
DyadicFunction refine_scaling(const FilterBank& bank, int depth);

/// w(x) = sqrt(2) * sum_i g_i s(2x - i), evaluated from refine_scaling at the
/// same depth.
DyadicFunction refine_wavelet(const FilterBank& bank, int depth);

/// Samples of s^k_n or w^k_n on the depth-J grid. Requires depth >= k.
DyadicFunction sample_element(const BasisElement& element, const FilterBank& bank, int depth);

}  // namespace wqm
