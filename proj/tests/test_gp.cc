// Copyright 2026 The ptx Authors
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
#include <vector>

#include <gtest/gtest.h>

#include "ptx/gp.hpp"

namespace ptx {
namespace {

TEST(Gp, MaternKernel) {
  EXPECT_EQ(matern52(0.0), 1.0);
  double r = 0.7, s = std::sqrt(5.0) * r;
  EXPECT_NEAR(matern52(r), (1 + s + s * s / 3) * std::exp(-s), 1e-15);
}

TEST(Gp, InterpolatesLinearFunction) {
  Eigen::MatrixXd x(10, 1);
  Eigen::VectorXd y(10);
  for (int i = 0; i < 10; ++i) {
    x(i, 0) = i / 9.0;
    y(i) = 3.0 * x(i, 0) - 1.0;
  }
  Rng r(1);
  GpSurrogate g = GpSurrogate::fit(x, y, r);
  Eigen::VectorXd m, v;
  g.predict(x, &m, &v);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(m(i), y(i), 1e-2);
  EXPECT_GE(g.nugget(), 1e-6);
  for (int d = 0; d < g.lengthscales().size(); ++d) {
    EXPECT_GE(g.lengthscales()(d), 1e-2);
    EXPECT_LE(g.lengthscales()(d), 1e2);
  }
}

TEST(Gp, TrainingPointWithinNuggetTolerance) {
  Rng r(2);
  const int n = 25;
  Eigen::MatrixXd x(n, 2);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = r.uniform();
    x(i, 1) = r.uniform();
    y(i) = std::sin(4 * x(i, 0)) + x(i, 1) * x(i, 1);
  }
  GpSurrogate g = GpSurrogate::fit(x, y, r);
  Eigen::VectorXd m, v;
  g.predict(x, &m, &v);
  // Nugget is in standardised units.
  double tol = 3.0 * std::sqrt(g.nugget()) * g.output_scale();
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(m(i), y(i), tol);
    EXPECT_GE(v(i), 0.0);
  }
}

TEST(Gp, ConstantOutputs) {
  Eigen::MatrixXd x(6, 1);
  Eigen::VectorXd y = Eigen::VectorXd::Constant(6, 4.2);
  for (int i = 0; i < 6; ++i) x(i, 0) = i / 5.0;
  Rng r(3);
  GpSurrogate g = GpSurrogate::fit(x, y, r);
  Eigen::MatrixXd xs(3, 1);
  xs << 0.13, 0.5, 0.97;
  Eigen::VectorXd m, v;
  g.predict(xs, &m, &v);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(m(i), 4.2, 1e-12);
  EXPECT_LE(g.signal_variance(), 1e-6);
}

TEST(Gp, NoisySineBeatsPriorBaseline) {
  Rng r(4);
  const int n = 40, m = 200;
  Eigen::MatrixXd x(n, 1), xt(m, 1);
  Eigen::VectorXd y(n), yt(m);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = r.uniform();
    y(i) = std::sin(2 * M_PI * x(i, 0)) + 0.1 * r.normal();
  }
  for (int i = 0; i < m; ++i) {
    xt(i, 0) = r.uniform();
    yt(i) = std::sin(2 * M_PI * xt(i, 0)) + 0.1 * r.normal();
  }
  GpSurrogate g = GpSurrogate::fit(x, y, r);
  Eigen::VectorXd mu, v;
  g.predict(xt, &mu, &v);
  double rmse = std::sqrt((mu - yt).squaredNorm() / m);
  double base = std::sqrt((yt.array() - y.mean()).square().sum() / m);
  EXPECT_LT(rmse, 0.5 * base);
}

TEST(Gp, FarFromDataVarianceApproachesSignal) {
  Eigen::MatrixXd x(5, 1);
  Eigen::VectorXd y(5);
  x << 0.0, 0.05, 0.1, 0.15, 0.2;
  y << 0.0, 0.3, 0.1, -0.2, 0.4;
  Rng r(5);
  GpOptions opts;
  opts.lengthscale_max = 0.05;
  GpSurrogate g = GpSurrogate::fit(x, y, r, opts);
  Eigen::MatrixXd far(1, 1);
  far << 50.0;
  Eigen::VectorXd m, v;
  g.predict(far, &m, &v);
  double s2 = g.signal_variance() * g.output_scale() * g.output_scale();
  EXPECT_NEAR(v(0), s2, 1e-9 * s2);
  EXPECT_NEAR(m(0), g.output_mean(), 1e-9);
}

TEST(Gp, SymmetricDataSymmetricPredictions) {
  Eigen::MatrixXd x(7, 1);
  Eigen::VectorXd y(7);
  for (int i = 0; i < 7; ++i) {
    x(i, 0) = i / 6.0;
    double t = x(i, 0) - 0.5;
    y(i) = t * t;
  }
  Rng r(6);
  GpSurrogate g = GpSurrogate::fit(x, y, r);
  Eigen::MatrixXd xs(2, 1);
  xs << 0.3, 0.7;
  Eigen::VectorXd m, v;
  g.predict(xs, &m, &v);
  EXPECT_NEAR(m(0), m(1), 1e-8);
  EXPECT_NEAR(v(0), v(1), 1e-8);
}

TEST(Gp, DeterministicGivenSeed) {
  Eigen::MatrixXd x(8, 2);
  Eigen::VectorXd y(8);
  Rng d(7);
  for (int i = 0; i < 8; ++i) {
    x(i, 0) = d.uniform();
    x(i, 1) = d.uniform();
    y(i) = x(i, 0) - 2 * x(i, 1);
  }
  Rng a(8), b(8);
  GpSurrogate g1 = GpSurrogate::fit(x, y, a), g2 = GpSurrogate::fit(x, y, b);
  EXPECT_EQ(g1.log_marginal_likelihood(), g2.log_marginal_likelihood());
  EXPECT_EQ(g1.lengthscales(), g2.lengthscales());
}

TEST(Gp, RejectsBadInput) {
  Rng r(9);
  Eigen::MatrixXd x(4, 2);
  x.setRandom();
  Eigen::VectorXd y(4);
  y.setOnes();
  EXPECT_THROW(GpSurrogate::fit(x, y, r), std::invalid_argument);  // needs 5 rows
  Eigen::MatrixXd x1(5, 1);
  x1 << 0, 0.2, 0.4, 0.6, 0.8;
  Eigen::VectorXd y1(5);
  y1 << 0, 1, NAN, 2, 3;
  EXPECT_THROW(GpSurrogate::fit(x1, y1, r), std::invalid_argument);
}

}  // namespace
}  // namespace ptx
