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

#include <vector>

#include <Eigen/Dense>

#include "wqm/hamiltonian.hpp"

namespace wqm {

/// Full eigendecomposition of a real symmetric matrix, eigenvalues ascending.
/// Column i of `eigenvectors` pairs with eigenvalues[i]; residuals[i] is
/// ||H v_i - lambda_i v_i||_2.
struct Spectrum {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd eigenvectors;
  std::vector<double> residuals;
  double matrix_max_norm = 0.0;

  static constexpr double kResidualTolerance = 1e-10;

  /// Every residual <= kResidualTolerance * max|H_ij|.
  bool certified() const;
  double max_residual() const;
};

/// Cyclic Jacobi rotations. Throws InvalidArgument for a non-square or
/// non-symmetric input and NonConvergence if the sweep cap is reached
/// (typically NaN contamination upstream).
Spectrum solve_symmetric(const Eigen::MatrixXd& h);
Spectrum solve_symmetric(const HamiltonianMatrix& h);

/// max|H - V diag(lambda) V^T|.
double reconstruction_error(const Eigen::MatrixXd& h, const Spectrum& spectrum);

/// max|V^T V - I|.
double orthonormality_error(const Spectrum& spectrum);

}  // namespace wqm
