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

#include <optional>
#include <vector>

#include "wqm/basis.hpp"
#include "wqm/cascade.hpp"
#include "wqm/filters.hpp"

// Brute-force quadrature over dyadic samples. Test-only: it shares the cascade
// sampler with the library but none of the exact integral tables, so it can
// arbitrate them.
namespace wqm::oracle {

struct Factor {
  BasisElement element;
  bool derivative = false;
};

struct QuadratureSpec {
  int depth = 12;
  std::vector<Factor> factors;  // one or two
  int weight_power = 0;         // integrand carries x^weight_power, 0..2
};

/// Trapezoid rule over the union support on the depth-J grid. A product of two
/// derivatives uses forward differences on cell midpoints; a single derivative
/// uses central differences. Throws UnsupportedOrder when a
/// derivative is requested for K < 3.
double quadrature(const QuadratureSpec& spec, const FilterBank& bank);

/// Central-difference derivative on the same grid, one sample wider on each side.
DyadicFunction central_difference(const DyadicFunction& f);

/// (f[j+1] - f[j]) / h, stored at index j; it belongs to the midpoint j + 1/2.
DyadicFunction forward_difference(const DyadicFunction& f);

// Shorthands for the table entries the library computes exactly.
double moment(const FilterBank& bank, int power, int depth);
double two_point(const FilterBank& bank, int power, long shift, int depth);
double connection(const FilterBank& bank, long shift, int depth);

}  // namespace wqm::oracle
