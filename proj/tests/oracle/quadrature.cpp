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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "wqm/error.hpp"

namespace wqm::oracle {

DyadicFunction central_difference(const DyadicFunction& f) {
  DyadicFunction d;
  d.depth = f.depth;
  d.first = f.first - 1;
  const double inv = 1.0 / (2.0 * f.spacing());
  const long count = static_cast<long>(f.values.size()) + 2;
  d.values.resize(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const long j = d.first + i;
    d.values[static_cast<std::size_t>(i)] = (f.at(j + 1) - f.at(j - 1)) * inv;
  }
  return d;
}

DyadicFunction forward_difference(const DyadicFunction& f) {
  DyadicFunction d;
  d.depth = f.depth;
  d.first = f.first - 1;
  const double inv = 1.0 / f.spacing();
  const long count = static_cast<long>(f.values.size()) + 1;
  d.values.resize(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const long j = d.first + i;
    d.values[static_cast<std::size_t>(i)] = (f.at(j + 1) - f.at(j)) * inv;
  }
  return d;
}

double quadrature(const QuadratureSpec& spec, const FilterBank& bank) {
  if (spec.factors.empty() || spec.factors.size() > 2) {
    throw InvalidArgument("quadrature takes one or two factors");
  }
  if (spec.weight_power < 0 || spec.weight_power > 2) {
    throw InvalidArgument("quadrature weight power must be 0, 1 or 2");
  }
  // Two derivative factors: product of forward differences, i.e. the exact
  // energy of the piecewise-linear interpolant, sampled at cell midpoints.
  const bool midpoint = std::all_of(spec.factors.begin(), spec.factors.end(),
                                    [](const Factor& f) { return f.derivative; });
  std::vector<DyadicFunction> samples;
  for (const Factor& f : spec.factors) {
    if (f.derivative && bank.order() < 3) {
      throw UnsupportedOrder("finite-difference derivatives need K=3");
    }
    DyadicFunction s = sample_element(f.element, bank, spec.depth);
    if (!f.derivative) {
      samples.push_back(std::move(s));
    } else {
      samples.push_back(midpoint ? forward_difference(s) : central_difference(s));
    }
  }
  long lo = samples.front().first;
  long hi = samples.front().last();
  for (const auto& s : samples) {
    lo = std::min(lo, s.first);
    hi = std::max(hi, s.last());
  }
  const double h = std::ldexp(1.0, -spec.depth);
  const double offset = midpoint ? 0.5 : 0.0;
  // Integrand vanishes at the union's endpoints, so trapezoid == plain sum.
  double acc = 0.0;
  for (long j = lo; j <= hi; ++j) {
    double v = std::pow((static_cast<double>(j) + offset) * h, spec.weight_power);
    for (const auto& s : samples) v *= s.at(j);
    acc += v;
  }
  return acc * h;
}

double moment(const FilterBank& bank, int power, int depth) {
  return quadrature({depth, {{{ElementKind::Scaling, 0, 0}}}, power}, bank);
}

double two_point(const FilterBank& bank, int power, long shift, int depth) {
  return quadrature(
      {depth, {{{ElementKind::Scaling, 0, 0}}, {{ElementKind::Scaling, 0, shift}}}, power}, bank);
}

double connection(const FilterBank& bank, long shift, int depth) {
  return quadrature({depth,
                     {{{ElementKind::Scaling, 0, 0}, true}, {{ElementKind::Scaling, 0, shift}, true}},
                     0},
                    bank);
}

}  // namespace wqm::oracle
