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

#include "wqm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wqm/error.hpp"

namespace wqm {

bool Spectrum::certified() const {
  const double bound = kResidualTolerance * matrix_max_norm;
  return std::all_of(residuals.begin(), residuals.end(),
                     [bound](double r) { return std::isfinite(r) && r <= bound; });
}

double Spectrum::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const Eigen::MatrixXd& a) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) acc += a(i, j) * a(i, j);
  return 2.0 * acc;
}

// Rotation in the (p, q) plane annihilating a(p, q); updates a and v in place.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;
  const Eigen::Index n = a.rows();

  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Spectrum solve_symmetric(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw InvalidArgument("eigensolver needs a square matrix");
  const Eigen::Index n = h.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (h(i, j) != h(j, i)) throw InvalidArgument("eigensolver needs an exactly symmetric matrix");

  Eigen::MatrixXd a = h;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double max_norm = n > 0 ? h.cwiseAbs().maxCoeff() : 0.0;
  const double total = h.squaredNorm();
  const double eps = std::numeric_limits<double>::epsilon();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a);
    if (!std::isfinite(off)) break;
    if (off <= eps * eps * total) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Elements below the rounding level of both diagonal entries are dropped.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (sweep == kMaxSweeps || !std::isfinite(a.sum())) {
    throw NonConvergence("Jacobi eigensolver did not converge after " +
                         std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  Spectrum s;
  s.matrix_max_norm = max_norm;
  s.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    s.eigenvalues.push_back(a(src, src));
    s.eigenvectors.col(i) = v.col(src);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd r =
        h * s.eigenvectors.col(i) - s.eigenvalues[static_cast<std::size_t>(i)] * s.eigenvectors.col(i);
    s.residuals.push_back(r.norm());
  }
  return s;
}

Spectrum solve_symmetric(const HamiltonianMatrix& h) { return solve_symmetric(h.entries()); }

double reconstruction_error(const Eigen::MatrixXd& h, const Spectrum& spectrum) {
  const Eigen::Map<const Eigen::VectorXd> lambda(spectrum.eigenvalues.data(),
                                                 static_cast<Eigen::Index>(spectrum.eigenvalues.size()));
  const Eigen::MatrixXd rebuilt =
      spectrum.eigenvectors * lambda.asDiagonal() * spectrum.eigenvectors.transpose();
  return (h - rebuilt).cwiseAbs().maxCoeff();
}

double orthonormality_error(const Spectrum& spectrum) {
  const Eigen::Index n = spectrum.eigenvectors.cols();
  const Eigen::MatrixXd gram = spectrum.eigenvectors.transpose() * spectrum.eigenvectors;
  return (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace wqm
