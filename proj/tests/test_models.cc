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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ptx/models/preece_baines.hpp"
#include "ptx/models/r2.hpp"
#include "ptx/models/survival.hpp"

namespace ptx {
namespace {

std::vector<double> random_lambda(const Bounds& b, Rng& rng) {
  std::vector<double> x(b.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(b.lower()[i], b.upper()[i]);
  return x;
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::ArrayXd x = a.array() - a.mean(), y = b.array() - b.mean();
  return (x * y).sum() / std::sqrt((x * x).sum() * (y * y).sum());
}

// ---- survival

TEST(Survival, BoundsTable) {
  Bounds b = survival_bounds(4);
  ASSERT_EQ(b.dim(), 17u);
  EXPECT_EQ(survival_lambda_dim(4), 17u);
  EXPECT_EQ(b.names()[0], "alpha");
  EXPECT_EQ(b.names()[16], "b_pi");
  EXPECT_EQ(b.lower()[0], 1e-4);
  EXPECT_EQ(b.upper()[1], 20.0);
  EXPECT_EQ(b.lower()[2], -10.0);
  EXPECT_EQ(b.upper()[3], 10.0);
  EXPECT_EQ(b.lower()[5], -1.0 + 1e-4);
  EXPECT_EQ(b.upper()[10], 1.0 - 1e-4);
  EXPECT_EQ(b.lower()[11], -5.0);
  EXPECT_EQ(b.upper()[14], 5.0);
  EXPECT_EQ(b.lower()[15], 1.0);
  EXPECT_EQ(b.upper()[16], 50.0);
}

TEST(Survival, SimulatedData) {
  SurvivalData d = simulate_survival_data(2000, 4, 7);
  EXPECT_EQ(d.size(), 2000u);
  EXPECT_EQ(d.dim(), 4);
  EXPECT_GT(d.censoring.minCoeff(), 20.0);
  EXPECT_NEAR(d.censoring.mean(), 21.0, 0.1);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(d.correlation(j, j), 1.0, 1e-12);
  Eigen::LLT<Eigen::MatrixXd> llt(d.correlation);
  EXPECT_EQ(llt.info(), Eigen::Success);
  // Sample correlation of the covariates tracks Q.
  EXPECT_NEAR(correlation(d.covariates.col(0), d.covariates.col(1)), d.correlation(0, 1), 0.1);
  SurvivalData e = simulate_survival_data(2000, 4, 7);
  EXPECT_EQ(d.covariates, e.covariates);
}

TEST(Survival, CuredDrawsSitAtCensoringTime) {
  SurvivalTheta t{1.0, 1.5, 0.0, Eigen::VectorXd::Zero(2)};
  std::vector<double> x = {0.3, -0.2};
  Rng r(1);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(survival_observable(t, 21.0, x, r), 21.0);
}

TEST(Survival, NonFiniteLinearPredictorDumpsTheta) {
  SurvivalTheta t{0.0, 1.0, INFINITY, Eigen::VectorXd::Zero(1)};
  std::vector<double> x = {1.0};
  Rng r(2);
  try {
    survival_observable(t, 21.0, x, r);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("beta_0="), std::string::npos);
  }
}

TEST(Survival, SymmetricSlopesWithZeroSlantAndCorrelation) {
  std::vector<double> lam(17, 0.0);
  lam[0] = 2; lam[1] = 2; lam[3] = 1; lam[4] = 1.5;
  lam[15] = 2; lam[16] = 5;
  SurvivalPrior prior(lam, 4);
  Rng r(3);
  const int n = 100000;
  Eigen::MatrixXd b(n, 4);
  for (int i = 0; i < n; ++i) b.row(i) = prior.draw(r).beta.transpose();
  for (int j = 0; j < 4; ++j) {
    Eigen::ArrayXd c = b.col(j).array() - b.col(j).mean();
    double skew = (c.cube().mean()) / std::pow((c * c).mean(), 1.5);
    EXPECT_NEAR(skew, 0.0, 0.05);
    for (int k = j + 1; k < 4; ++k) EXPECT_NEAR(correlation(b.col(j), b.col(k)), 0.0, 0.03);
  }
}

TEST(Survival, AnalyticSdMatchesDraws) {
  Rng r(4);
  Bounds bounds = survival_bounds(4);
  PriorModel m = survival_prior_model(4);
  for (int rep = 0; rep < 5; ++rep) {
    auto lam = random_lambda(bounds, r);
    lam[0] = 2.0 + rep;  // keep the gamma tail moderate
    auto an = m.analytic_sd(lam);
    Eigen::MatrixXd d = m.sampler(lam, 200000, r);
    for (int q = 0; q < d.cols(); ++q) {
      Eigen::ArrayXd c = d.col(q).array() - d.col(q).mean();
      double sd = std::sqrt((c * c).sum() / (d.rows() - 1));
      EXPECT_NEAR(sd, an[q], 0.02 * an[q]) << m.names[q];
    }
  }
}

TEST(Survival, CensoredFractionMatchesNestedOracle) {
  SurvivalData data = simulate_survival_data(10, 4, 11);
  PredictiveSampler smp = survival_predictive(data);
  Bounds bounds = survival_bounds(4);
  Rng r(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto lam = random_lambda(bounds, r);
    std::size_t row = rep;
    double c = data.censoring[row];
    Eigen::VectorXd x = data.covariates.row(row).transpose();
    // Oracle: E[pi + (1 - pi) S(C)] over prior draws.
    SurvivalPrior prior(lam, 4);
    const int m = 200000;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      SurvivalTheta t = prior.draw(r);
      double lp = t.beta0 + x.dot(t.beta);
      double surv = std::exp(-std::exp(t.gamma * std::log(c) + lp));
      acc += t.pi + (1.0 - t.pi) * surv;
    }
    double oracle = acc / m;
    const std::size_t n = 50000;
    auto y = smp(lam, row, n, r);
    double frac = 0.0;
    for (double v : y) {
      ASSERT_TRUE(v > 0.0 && v <= c);
      frac += (v == c);
    }
    frac /= n;
    double se = std::sqrt(oracle * (1 - oracle) / n) + std::sqrt(0.25 / m);
    EXPECT_NEAR(frac, oracle, 4 * se + 1e-12) << "replicate " << rep;
  }
}

TEST(Survival, ProblemBundle) {
  SurvivalData d = simulate_survival_data(5, 4, 1);
  Problem p = make_survival_problem(d);
  EXPECT_EQ(p.targets.size(), 5u);
  EXPECT_EQ(p.targets.row(3).stream_key.value(), 3u);
  EXPECT_EQ(p.prior.names.size(), 7u);
  EXPECT_EQ(p.targets.target(2).log_cdf(d.censoring[2]), 0.0);
}

// ---- R^2

TEST(R2, ValueExamples) {
  EXPECT_DOUBLE_EQ(r2_value(3.0, 1.0), 0.75);
  EXPECT_EQ(r2_value(0.0, 2.0), 0.0);
  EXPECT_LT(r2_value(1e300, 1e-300), 1.0);
  Eigen::MatrixXd x = simulate_r2_design(20, 3, 1);
  Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(3, 2);
  Eigen::VectorXd s2 = Eigen::VectorXd::Ones(2);
  for (double v : r2_values(x, beta, s2)) EXPECT_EQ(v, 0.0);
  beta.setConstant(1e200);
  EXPECT_THROW(r2_values(x, beta, s2), std::overflow_error);
}

TEST(R2, DesignIsCentred) {
  Eigen::MatrixXd x = simulate_r2_design(50, 8, 3);
  for (int j = 0; j < 8; ++j) EXPECT_NEAR(x.col(j).mean(), 0.0, 1e-14);
}

TEST(R2, BoundsTable) {
  Bounds dl = r2_bounds(R2Prior::kDirichletLaplace, 100, 20);
  EXPECT_NEAR(dl.lower()[0], 1.0 / 300.0, 1e-16);
  EXPECT_EQ(dl.upper()[0], 0.5);
  Bounds hs = r2_bounds(R2Prior::kHorseshoe, 100, 20);
  EXPECT_EQ(hs.upper()[0], 10.0);
  EXPECT_EQ(hs.lower()[2], 1e-5);
  EXPECT_EQ(hs.upper()[1], 80.0);
  EXPECT_EQ(hs.lower()[3], 2.0);
  EXPECT_EQ(hs.lower()[4], 0.2);
  EXPECT_EQ(hs.upper()[4], 500.0);
}

TEST(R2, PriorNames) {
  for (R2Prior k : {R2Prior::kGaussian, R2Prior::kDirichletLaplace, R2Prior::kHorseshoe}) {
    EXPECT_EQ(r2_prior_from_name(r2_prior_name(k)), k);
  }
  EXPECT_THROW(r2_prior_from_name("ridge"), std::invalid_argument);
}

TEST(R2, DrawsInUnitIntervalForEveryPrior) {
  const std::size_t n = 40, p = 10;
  Eigen::MatrixXd x = simulate_r2_design(n, p, 2);
  Rng r(6);
  for (R2Prior k : {R2Prior::kGaussian, R2Prior::kDirichletLaplace, R2Prior::kHorseshoe}) {
    Bounds b = r2_bounds(k, n, p);
    PredictiveSampler smp = r2_predictive(k, x);
    for (int rep = 0; rep < 10; ++rep) {
      auto lam = random_lambda(b, r);
      for (double v : smp(lam, 0, 2000, r)) ASSERT_TRUE(v >= 0.0 && v < 1.0) << v;
    }
  }
}

TEST(R2, DirichletWeightsSumToOne) {
  Rng r(7);
  std::vector<double> lam = {0.1, 5.0, 5.0};
  R2Draws d = r2_draw(R2Prior::kDirichletLaplace, lam, 30, 12, 1000, r);
  for (int s = 0; s < 1000; ++s) EXPECT_NEAR(d.phi.col(s).sum(), 1.0, 1e-12);
}

TEST(R2, LargeGammaConcentratesAtZero) {
  Eigen::MatrixXd x = simulate_r2_design(50, 10, 4);
  Rng r(8);
  std::vector<double> lam = {1e4, 5.0, 5.0};
  auto y = r2_predictive(R2Prior::kGaussian, x)(lam, 0, 10001, r);
  std::nth_element(y.begin(), y.begin() + 5000, y.end());
  EXPECT_LT(y[5000], 0.05);
}

TEST(R2, TargetGrid) {
  auto s = r2_target_shapes();
  ASSERT_EQ(s.size(), 4u);
  const double expect[4] = {0.33, 0.69, 1.44, 3.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i], expect[i], 0.005);
  EXPECT_NEAR(s[1] / s[0], s[2] / s[1], 1e-12);
  EXPECT_NEAR(s[0], 1.0 / 3.0, 1e-15);
  auto g = r2_target_grid();
  ASSERT_EQ(g.size(), 16u);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // Swapped shapes mirror the CDF: F_ij(y) = 1 - F_ji(1 - y).
      double a = std::exp(g[4 * i + j].log_cdf(0.3));
      double b = std::exp(g[4 * j + i].log_cdf(0.7));
      EXPECT_NEAR(a, 1.0 - b, 1e-12);
    }
}

TEST(R2, MomentTargetMatchesOwnDraws) {
  Eigen::MatrixXd x = simulate_r2_design(50, 10, 5);
  std::vector<double> lam = {50.0, 5.0, 5.0};
  TargetSpec t = r2_moment_target(R2Prior::kGaussian, lam, x, 100000, 9);
  Rng r(10);
  auto y = r2_predictive(R2Prior::kGaussian, x)(lam, 0, 100000, r);
  double m = 0;
  for (double v : y) m += v;
  m /= y.size();
  const auto& d = t.mixture()->components()[0].dist;
  EXPECT_NEAR(d.mean(), m, 0.003);
}

TEST(R2, SecondaryFiniteAtRandomLambda) {
  const std::size_t n = 30, p = 8;
  Rng r(11);
  for (R2Prior k : {R2Prior::kGaussian, R2Prior::kDirichletLaplace, R2Prior::kHorseshoe}) {
    PriorModel m = r2_prior_model(k, n, p);
    SecondaryConfig cfg = r2_secondary(k, p);
    ASSERT_EQ(cfg.sources.size(), m.names.size());
    Bounds b = r2_bounds(k, n, p);
    for (int rep = 0; rep < 5; ++rep) {
      auto lam = random_lambda(b, r);
      EXPECT_TRUE(std::isfinite(secondary_objective(lam, m, cfg, r))) << r2_prior_name(k);
    }
  }
}

TEST(R2, GaussianAnalyticSdMatchesDraws) {
  PriorModel m = r2_prior_model(R2Prior::kGaussian, 30, 4);
  std::vector<double> lam = {4.0, 12.0, 6.0};
  auto an = m.analytic_sd(lam);
  Rng r(12);
  Eigen::MatrixXd d = m.sampler(lam, 400000, r);
  for (int q = 0; q < d.cols(); ++q) {
    Eigen::ArrayXd c = d.col(q).array() - d.col(q).mean();
    EXPECT_NEAR(std::sqrt((c * c).mean()), an[q], 0.02 * an[q]) << m.names[q];
  }
}

// ---- Preece-Baines

TEST(PreeceBaines, HeightIdentityAndLimit) {
  PbTheta th = {80, 90, 0.1, 1.0, 13};
  EXPECT_EQ(pb_height(13.0, th), 80.0);
  EXPECT_NEAR(pb_height(1e6, th), 170.0, 1e-12);
  Rng r(13);
  for (int i = 0; i < 1000; ++i) {
    PbTheta t = {100 + 80 * r.uniform(), 30 * r.uniform(), r.uniform(), r.uniform(),
                 9 + 6 * r.uniform()};
    ASSERT_EQ(pb_height(t[4], t), t[0]);
  }
}

TEST(PreeceBaines, MonotoneForPriorDraws) {
  Rng r(14);
  Bounds b = pb_bounds();
  std::vector<double> lam = {170, 8, 15, 1.5, 0.1, 0.02, 1.0, 0.2, 13, 0.8};
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    PbTheta th = pb_draw_theta(lam, r);
    double prev = -INFINITY;
    for (double t = kPbMinAge; t <= kPbMaxAge; t += 0.1) {
      double h = pb_height(t, th);
      violations += h < prev - 1e-9;
      prev = h;
    }
  }
  EXPECT_EQ(violations, 0);
  EXPECT_TRUE(b.contains(lam));
}

TEST(PreeceBaines, BoundsTable) {
  Bounds b = pb_bounds();
  ASSERT_EQ(b.dim(), 10u);
  EXPECT_EQ(b.lower()[0], 130.0);
  EXPECT_EQ(b.upper()[0], 185.0);
  EXPECT_EQ(b.lower()[1], 1e-6);
  EXPECT_EQ(b.upper()[1], 30.0);
  EXPECT_EQ(b.lower()[8], 9.0);
  EXPECT_EQ(b.upper()[8], 15.0);
  EXPECT_EQ(b.names()[9], "gamma_sd");
}

TEST(PreeceBaines, LognormalParamsMatchMoments) {
  auto [mu, s] = pb_lognormal_params(10.0, 3.0);
  EXPECT_NEAR(std::exp(mu + s * s / 2), 10.0, 1e-12);
  EXPECT_NEAR(std::sqrt(std::expm1(s * s)) * std::exp(mu + s * s / 2), 3.0, 1e-12);
  EXPECT_THROW(pb_lognormal_params(0.0, 1.0), std::invalid_argument);
}

TEST(PreeceBaines, DegeneratePriorGivesNoiseSpread) {
  std::vector<double> lam = {160, 1e-6, 20, 1e-6, 0.1, 1e-6, 1.0, 1e-6, 13, 1e-6};
  PredictiveSampler smp = pb_predictive({13.0});
  Rng r(15);
  auto y = smp(lam, 0, 100000, r);
  double m = 0, v = 0;
  for (double x : y) m += x;
  m /= y.size();
  for (double x : y) v += (x - m) * (x - m);
  v /= y.size() - 1;
  // sigma_y ~ LogNormal(0, 0.04): E[sigma_y^2] = exp(2 * 0.04).
  EXPECT_NEAR(m, 160.0, 0.02);
  EXPECT_NEAR(v, std::exp(0.08), 0.03);
}

TEST(PreeceBaines, MarginalAgesUniform) {
  std::vector<double> lam = {150, 1e-6, 20, 1e-6, 0.1, 1e-6, 1.0, 1e-6, 10, 1e-6};
  PredictiveSampler smp = pb_predictive({});
  Rng r(16);
  auto y = smp(lam, 0, 20000, r);
  PbTheta th = {150, 20, 0.1, 1.0, 10};
  double lo = pb_height(2.0, th) - 6, hi = pb_height(18.0, th) + 6;
  for (double v : y) ASSERT_TRUE(v > lo && v < hi);
  // Half the ages are below 10, where the curve is below h0.
  double below = std::count_if(y.begin(), y.end(), [](double v) { return v < 150; });
  EXPECT_NEAR(below / y.size(), 0.5, 0.02);
}

TEST(PreeceBaines, Problems) {
  Problem c = make_pb_problem(PbMode::kCovariateSpecific);
  EXPECT_EQ(c.targets.size(), 4u);
  EXPECT_EQ(c.targets.row(2).values[0], 13.0);
  Problem p = make_pb_problem(PbMode::kCovariateIndependent);
  EXPECT_EQ(p.targets.size(), 1u);
  EXPECT_EQ(p.prior.names.size(), 5u);
  std::vector<double> lam = {170, 8, 15, 3, 0.1, 0.02, 1.0, 0.2, 13, 0.8};
  auto sd = p.prior.analytic_sd(lam);
  EXPECT_EQ(sd, (std::vector<double>{8, 3, 0.02, 0.2, 0.8}));
}

}  // namespace
}  // namespace ptx
