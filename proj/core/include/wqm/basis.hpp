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

#include "wqm/filters.hpp"

namespace wqm {

enum class ElementKind { Scaling, Wavelet };

/// One basis function: s^k_n(x) = 2^{k/2} s(2^k x - n) or the same for w.
/// Support is (n / 2^k, (n + 2K - 1) / 2^k).
struct BasisElement {
  ElementKind kind = ElementKind::Scaling;
  int scale = 0;
  long translation = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

std::string to_string(const BasisElement& e);

/// How the wavelet translation window grows with scale.
enum class WaveletRange {
  FixedIndex,            // |n| <= N_w at every wavelet scale
  ScaledWithResolution,  // |n| <= N_w * 2^(m - k0), same physical window
};

/// Truncated basis {s^{k0}_n}_{|n|<=Ns} u {w^m_n}_{|n|<=Nw, m=k0..k0+M}.
///
/// Enumeration order is fixed: scaling elements by ascending translation, then
/// wavelets grouped by ascending scale, each by ascending translation. Block
/// views of the Hamiltonian rely on this order.
class BasisSet {
 public:
  BasisSet(int base_scale, int scaling_half_range, int wavelet_half_range, int extra_scales,
           WaveletRange policy = WaveletRange::FixedIndex);

  int base_scale() const { return base_scale_; }
  int scaling_half_range() const { return scaling_half_range_; }
  int wavelet_half_range() const { return wavelet_half_range_; }
  int extra_scales() const { return extra_scales_; }
  WaveletRange policy() const { return policy_; }

  /// Common scale every element is refined to before integration.
  int finest_scale() const { return base_scale_ + extra_scales_ + 1; }

  std::size_t size() const { return elements_.size(); }
  std::size_t scaling_count() const { return static_cast<std::size_t>(2 * scaling_half_range_ + 1); }
  std::size_t wavelet_count() const { return size() - scaling_count(); }

  const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const BasisElement> elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Translation half-range for wavelets at `scale` under this set's policy.
  long wavelet_half_range_at(int scale) const;

 private:
  int base_scale_;
  int scaling_half_range_;
  int wavelet_half_range_;
  int extra_scales_;
  WaveletRange policy_;
  std::vector<BasisElement> elements_;
};

/// Throws InvalidArgument for negative half-ranges or M.
BasisSet build_basis(int base_scale, int scaling_half_range, int wavelet_half_range,
                     int extra_scales, WaveletRange policy = WaveletRange::FixedIndex);

/// Coefficients of an element in the scaling functions of a finer scale:
/// element = sum_p c_p s^{scale}_p, stored contiguously from translation `first`.
struct FineExpansion {
  int scale = 0;
  long first = 0;
  std::vector<double> coefficients;

  long last() const { return first + static_cast<long>(coefficients.size()) - 1; }
  double at(long p) const;
  double norm_squared() const;
};

/// Expands `element` into s^{target_scale}_p. One step maps
///   s^k_n -> sum_i h_i s^{k+1}_{2n+i},   w^k_n -> sum_i g_i s^{k+1}_{2n+i}.
/// Throws InvalidArgument when target_scale is below the element's scale, or
/// equal to it for a wavelet.
FineExpansion refine_element(const BasisElement& element, const FilterBank& bank,
                             int target_scale);

/// Exact L2 inner product of two basis elements via a common fine scale.
double pair_inner_product(const BasisElement& a, const BasisElement& b, const FilterBank& bank);

}  // namespace wqm
