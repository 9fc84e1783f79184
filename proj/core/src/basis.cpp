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

#include "wqm/basis.hpp"

#include <algorithm>
#include <string>

#include "wqm/error.hpp"

namespace wqm {

std::string to_string(const BasisElement& e) {
  return std::string(e.kind == ElementKind::Scaling ? "s" : "w") + "^" +
         std::to_string(e.scale) + "_" + std::to_string(e.translation);
}

BasisSet::BasisSet(int base_scale, int scaling_half_range, int wavelet_half_range,
                   int extra_scales, WaveletRange policy)
    : base_scale_(base_scale),
      scaling_half_range_(scaling_half_range),
      wavelet_half_range_(wavelet_half_range),
      extra_scales_(extra_scales),
      policy_(policy) {
  if (scaling_half_range < 0 || wavelet_half_range < 0 || extra_scales < 0) {
    throw InvalidArgument("truncation parameters Ns, Nw, M must be non-negative");
  }
  for (long n = -scaling_half_range; n <= scaling_half_range; ++n) {
    elements_.push_back({ElementKind::Scaling, base_scale, n});
  }
  for (int m = base_scale; m <= base_scale + extra_scales; ++m) {
    const long range = wavelet_half_range_at(m);
    for (long n = -range; n <= range; ++n) {
      elements_.push_back({ElementKind::Wavelet, m, n});
    }
  }
}

long BasisSet::wavelet_half_range_at(int scale) const {
  if (policy_ == WaveletRange::FixedIndex) return wavelet_half_range_;
  return static_cast<long>(wavelet_half_range_) << (scale - base_scale_);
}

BasisSet build_basis(int base_scale, int scaling_half_range, int wavelet_half_range,
                     int extra_scales, WaveletRange policy) {
  return BasisSet(base_scale, scaling_half_range, wavelet_half_range, extra_scales, policy);
}

double FineExpansion::at(long p) const {
  if (p < first || p > last()) return 0.0;
  return coefficients[static_cast<std::size_t>(p - first)];
}

double FineExpansion::norm_squared() const {
  double acc = 0.0;
  for (double c : coefficients) acc += c * c;
  return acc;
}

namespace {

FineExpansion refine_once(const FineExpansion& in, std::span<const double> filter) {
  const std::size_t taps = filter.size();
  FineExpansion out;
  out.scale = in.scale + 1;
  out.first = 2 * in.first;
  out.coefficients.assign(2 * (in.coefficients.size() - 1) + taps, 0.0);
  for (std::size_t j = 0; j < in.coefficients.size(); ++j) {
    const double c = in.coefficients[j];
    for (std::size_t i = 0; i < taps; ++i) out.coefficients[2 * j + i] += c * filter[i];
  }
  return out;
}

}  // namespace

FineExpansion refine_element(const BasisElement& element, const FilterBank& bank,
                             int target_scale) {
  const bool wavelet = element.kind == ElementKind::Wavelet;
  if (target_scale < element.scale || (wavelet && target_scale == element.scale)) {
    throw InvalidArgument("cannot refine " + to_string(element) + " to scale " +
                          std::to_string(target_scale));
  }
  FineExpansion e{element.scale, element.translation, {1.0}};
  if (wavelet) e = refine_once(e, bank.g());
  while (e.scale < target_scale) e = refine_once(e, bank.h());
  return e;
}

double pair_inner_product(const BasisElement& a, const BasisElement& b, const FilterBank& bank) {
  // A wavelet needs at least one refinement step to be expressed in scaling functions.
  auto min_scale = [](const BasisElement& e) {
    return e.kind == ElementKind::Wavelet ? e.scale + 1 : e.scale;
  };
  const int common = std::max(min_scale(a), min_scale(b));
  const FineExpansion ea = refine_element(a, bank, common);
  const FineExpansion eb = refine_element(b, bank, common);
  const long lo = std::max(ea.first, eb.first);
  const long hi = std::min(ea.last(), eb.last());
  double acc = 0.0;
  for (long p = lo; p <= hi; ++p) acc += ea.at(p) * eb.at(p);
  return acc;
}

}  // namespace wqm
