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

#include "wqm/hamiltonian.hpp"

#include <algorithm>
#include <vector>

#include "wqm/error.hpp"

namespace wqm {

std::string_view to_string(Block b) {
  switch (b) {
    case Block::ss: return "ss";
    case Block::sw: return "sw";
    case Block::ws: return "ws";
    case Block::ww: return "ww";
  }
  return "?";
}

HamiltonianMatrix::HamiltonianMatrix(BasisSet basis, Eigen::MatrixXd entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw InvalidArgument("Hamiltonian entries do not match the basis size");
  }
}

BlockRange HamiltonianMatrix::range(Block which) const {
  const std::size_t s = basis_.scaling_count();
  const std::size_t w = basis_.wavelet_count();
  switch (which) {
    case Block::ss: return {0, s, 0, s};
    case Block::sw: return {0, s, s, w};
    case Block::ws: return {s, w, 0, s};
    case Block::ww: return {s, w, s, w};
  }
  return {0, 0, 0, 0};
}

Eigen::Block<const Eigen::MatrixXd> HamiltonianMatrix::block_view(Block which) const {
  const BlockRange r = range(which);
  return entries_.block(static_cast<Eigen::Index>(r.row_begin),
                        static_cast<Eigen::Index>(r.col_begin), static_cast<Eigen::Index>(r.rows),
                        static_cast<Eigen::Index>(r.cols));
}

namespace {

double pair_element(const FineExpansion& ea, const FineExpansion& eb,
                    const IntegralTables& tables) {
  const int k = ea.scale;
  const long w = tables.half_width();
  double acc = 0.0;
  for (long p = ea.first; p <= ea.last(); ++p) {
    const double cp = ea.at(p);
    if (cp == 0.0) continue;
    const long lo = std::max(eb.first, p - w);
    const long hi = std::min(eb.last(), p + w);
    for (long q = lo; q <= hi; ++q) {
      const double kinetic = single_scale_kinetic(tables.connection, p, q, k);
      const double potential = 0.5 * single_scale_x2(tables.two_point, p, q, k);
      acc += cp * eb.at(q) * (kinetic + potential);
    }
  }
  return acc;
}

}  // namespace

double matrix_element(const BasisElement& a, const BasisElement& b, const IntegralTables& tables,
                      int fine_scale) {
  return pair_element(refine_element(a, tables.bank, fine_scale),
                      refine_element(b, tables.bank, fine_scale), tables);
}

HamiltonianMatrix assemble(const BasisSet& basis, const FilterBank& bank,
                           const IntegralTables& tables) {
  if (!(bank == tables.bank)) {
    throw InvalidArgument("integral tables were computed for a different filter bank");
  }
  if (bank.order() != 3) {
    throw UnsupportedOrder("Hamiltonian assembly requires K=3");
  }
  const int fine = basis.finest_scale();
  std::vector<FineExpansion> expansions;
  expansions.reserve(basis.size());
  for (const BasisElement& e : basis) expansions.push_back(refine_element(e, bank, fine));

  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      const FineExpansion& ea = expansions[static_cast<std::size_t>(a)];
      const FineExpansion& eb = expansions[static_cast<std::size_t>(b)];
      if (ea.last() + tables.half_width() < eb.first ||
          eb.last() + tables.half_width() < ea.first) {
        continue;
      }
      const double v = pair_element(ea, eb, tables);
      h(a, b) = v;
      h(b, a) = v;
    }
  }
  return HamiltonianMatrix(basis, std::move(h));
}

HamiltonianMatrix assemble(const BasisSet& basis, const IntegralTables& tables) {
  return assemble(basis, tables.bank, tables);
}

}  // namespace wqm
