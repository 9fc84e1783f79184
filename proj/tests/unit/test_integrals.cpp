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

#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "quadrature.hpp"
#include "wqm/error.hpp"
#include "wqm/filters.hpp"
#include "wqm/integrals.hpp"

namespace wqm {
namespace {

TEST(ScalingMoments, ZerothMomentIsOne) {
  for (int k : {2, 3}) EXPECT_EQ(scaling_moments(make_filter_bank(k))[0], 1.0);
}

TEST(ScalingMoments, FirstMomentK2ClosedForm) {
  // m = 1 recursion by hand: M1 = sum_i i h_i / sqrt(2) = (3 - sqrt(3)) / 2.
  const MomentTable t = scaling_moments(make_filter_bank(2));
  EXPECT_NEAR(t[1], (3.0 - std::sqrt(3.0)) / 2.0, 1e-15);
  EXPECT_NEAR(t[1], oracle::moment(make_filter_bank(2), 1, 12), 1e-5);
}

TEST(ScalingMoments, SecondMomentK2MatchesDeepQuadrature) {
  const FilterBank bank = make_filter_bank(2);
  EXPECT_NEAR(scaling_moments(bank)[2], oracle::moment(bank, 2, 14), 1e-8);
}

TEST(ScalingMoments, RejectsHaar) {
  EXPECT_THROW(scaling_moments(make_filter_bank(1)), UnsupportedOrder);
}

TEST(TwoPointMoments, ZerothPowerIsKronecker) {
  for (int k : {2, 3}) {
    const TwoPointMoments x = two_point_moments(make_filter_bank(k));
    EXPECT_EQ(x.half_width, 2 * k - 2);
    for (long n = -x.half_width - 2; n <= x.half_width + 2; ++n) {
      EXPECT_EQ(x.at(0, n), n == 0 ? 1.0 : 0.0) << "n=" << n;
    }
  }
}

TEST(TwoPointMoments, PartitionOfUnitySumRules) {
  for (int k : {2, 3}) {
    const FilterBank bank = make_filter_bank(k);
    const TwoPointMoments x = two_point_moments(bank);
    const MomentTable m = scaling_moments(bank);
    double s1 = 0.0, s2 = 0.0;
    for (long n = -x.half_width; n <= x.half_width; ++n) {
      s1 += x.at(1, n);
      s2 += x.at(2, n);
    }
    EXPECT_NEAR(s1, m[1], 1e-10) << "K=" << k;
    EXPECT_NEAR(s2, m[2], 1e-10) << "K=" << k;
  }
}

TEST(TwoPointMoments, K3MatchesDeepQuadrature) {
  const FilterBank bank = make_filter_bank(3);
  const TwoPointMoments x = two_point_moments(bank);
  for (long n = -x.half_width; n <= x.half_width; ++n) {
    EXPECT_NEAR(x.at(1, n), oracle::two_point(bank, 1, n, 14), 1e-6) << "n=" << n;
    EXPECT_NEAR(x.at(2, n), oracle::two_point(bank, 2, n, 14), 1e-6) << "n=" << n;
  }
}

TEST(TwoPointMoments, ReflectionSymmetryOfFirstPower) {
  // Substituting x -> x + n: X1_{-n} = X1_n + n X0_n, and X1_{-n} = X1_n for n != 0.
  const TwoPointMoments x = two_point_moments(make_filter_bank(3));
  for (long n = 1; n <= x.half_width; ++n) EXPECT_NEAR(x.at(1, -n), x.at(1, n), 1e-14);
}

TEST(Connection, SumRules) {
  const ConnectionTable c = derivative_connection(make_filter_bank(3));
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (long n = -c.half_width; n <= c.half_width; ++n) {
    s0 += c.at(n);
    s1 += static_cast<double>(n) * c.at(n);
    s2 += static_cast<double>(n * n) * c.at(n);
  }
  EXPECT_NEAR(s0, 0.0, 1e-10);
  EXPECT_NEAR(s1, 0.0, 1e-10);
  EXPECT_NEAR(s2, -2.0, 1e-12);
}

TEST(Connection, SymmetricAndPositiveCentre) {
  const ConnectionTable c = derivative_connection(make_filter_bank(3));
  EXPECT_GT(c.at(0), 0.0);
  for (long n = 1; n <= c.half_width; ++n) EXPECT_EQ(c.at(n), c.at(-n));
  EXPECT_EQ(c.at(c.half_width + 1), 0.0);
}

TEST(Connection, MatchesFiniteDifferenceOracle) {
  const FilterBank bank = make_filter_bank(3);
  const ConnectionTable c = derivative_connection(bank);
  for (long n = -c.half_width; n <= c.half_width; ++n) {
    const double expected = oracle::connection(bank, n, 12);
    EXPECT_NEAR(c.at(n), expected, 1e-3 * std::abs(expected)) << "n=" << n;
  }
}

TEST(Connection, RejectsRoughFilters) {
  EXPECT_THROW(derivative_connection(make_filter_bank(1)), UnsupportedOrder);
  EXPECT_THROW(derivative_connection(make_filter_bank(2)), UnsupportedOrder);
}

class SingleScale : public ::testing::Test {
 protected:
  IntegralTables tables_{IntegralTables::compute(make_filter_bank(3))};
};

TEST_F(SingleScale, X2Definition) {
  const auto& x = tables_.two_point;
  EXPECT_EQ(single_scale_x2(x, 0, 0, 0), x.at(2, 0));
  for (long n : {-3L, 2L, 7L}) {
    EXPECT_NEAR(single_scale_x2(x, n, n, 0),
                x.at(2, 0) + 2.0 * n * x.at(1, 0) + static_cast<double>(n * n), 1e-12);
  }
}

TEST_F(SingleScale, X2ScaleCovariance) {
  const auto& x = tables_.two_point;
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      EXPECT_EQ(single_scale_x2(x, p, q, 1), 0.25 * single_scale_x2(x, p, q, 0));
}

TEST_F(SingleScale, X2AgreesWithShiftedQuadrature) {
  // integral of x^2 s(x - p) s(x - q) at a translated pair, brute force.
  const FilterBank& bank = tables_.bank;
  for (auto [p, q] : {std::pair{2L, 3L}, std::pair{-1L, -1L}, std::pair{-2L, 1L}}) {
    const double brute = oracle::quadrature(
        {12, {{{ElementKind::Scaling, 0, p}}, {{ElementKind::Scaling, 0, q}}}, 2}, bank);
    EXPECT_NEAR(single_scale_x2(tables_.two_point, p, q, 0), brute, 1e-5);
    const double brute_fine = oracle::quadrature(
        {12, {{{ElementKind::Scaling, 1, p}}, {{ElementKind::Scaling, 1, q}}}, 2}, bank);
    EXPECT_NEAR(single_scale_x2(tables_.two_point, p, q, 1), brute_fine, 1e-5);
  }
}

TEST_F(SingleScale, KineticBandAndScaling) {
  const auto& c = tables_.connection;
  EXPECT_EQ(single_scale_kinetic(c, 0, 5, 0), 0.0);
  EXPECT_EQ(single_scale_kinetic(c, 10, -3, 2), 0.0);
  EXPECT_EQ(single_scale_kinetic(c, 3, 3, 0), 0.5 * c.at(0));
  EXPECT_GT(single_scale_kinetic(c, 3, 3, 0), 0.0);
  for (long p = -2; p <= 2; ++p)
    for (long q = -6; q <= 6; ++q)
      EXPECT_EQ(single_scale_kinetic(c, p, q, 1), 4.0 * single_scale_kinetic(c, p, q, 0));
}

TEST_F(SingleScale, KineticWindowIsPositiveSemidefinite) {
  for (int width : {5, 12, 30}) {
    Eigen::MatrixXd t(width, width);
    for (int p = 0; p < width; ++p)
      for (int q = 0; q < width; ++q) t(p, q) = single_scale_kinetic(tables_.connection, p, q, 0);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10) << "width=" << width;
  }
}

TEST(IntegralTables, ComputeRequiresK3) {
  EXPECT_THROW(IntegralTables::compute(make_filter_bank(2)), UnsupportedOrder);
  const IntegralTables t = IntegralTables::compute(make_filter_bank(3));
  EXPECT_EQ(t.half_width(), 4);
  EXPECT_EQ(t.connection.half_width, 4);
}

}  // namespace
}  // namespace wqm
