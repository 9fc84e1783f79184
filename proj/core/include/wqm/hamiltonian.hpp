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
#include <string_view>

#include <Eigen/Dense>

#include "wqm/basis.hpp"
#include "wqm/integrals.hpp"

namespace wqm {

/// The dimensionless oscillator -1/2 d^2/dq^2 + 1/2 q^2. All numerics run in
/// q; the physical constants only fix the units recorded here.
struct OscillatorModel {
  static constexpr bool kDimensionless = true;
  static constexpr std::string_view kLengthScale = "(hbar^2/(m k))^(1/4)";
  static constexpr std::string_view kEnergyUnit = "hbar*omega";
};

enum class Block { ss, sw, ws, ww };

std::string_view to_string(Block b);

struct BlockRange {
  std::size_t row_begin;
  std::size_t rows;
  std::size_t col_begin;
  std::size_t cols;
};

/// Dense symmetric Hamiltonian over a BasisSet, in units of hbar*omega.
class HamiltonianMatrix {
 public:
  HamiltonianMatrix(BasisSet basis, Eigen::MatrixXd entries);

  const BasisSet& basis() const { return basis_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  std::size_t size() const { return basis_.size(); }
  double operator()(std::size_t a, std::size_t b) const {
    return entries_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

  BlockRange range(Block which) const;

  /// Contiguous view of one of the four scaling/wavelet blocks.
  Eigen::Block<const Eigen::MatrixXd> block_view(Block which) const;

 private:
  BasisSet basis_;
  Eigen::MatrixXd entries_;
};

/// Matrix element <a|H|b> with both elements refined to `fine_scale`.
double matrix_element(const BasisElement& a, const BasisElement& b, const IntegralTables& tables,
                      int fine_scale);

/// Assembles <a|H|b> for every unordered pair of basis elements at the
/// common scale basis.finest_scale(). Throws InvalidArgument when `tables`
/// were computed for a different filter bank than `bank`.
HamiltonianMatrix assemble(const BasisSet& basis, const FilterBank& bank,
                           const IntegralTables& tables);

/// Convenience overload using tables.bank.
HamiltonianMatrix assemble(const BasisSet& basis, const IntegralTables& tables);

}  // namespace wqm
