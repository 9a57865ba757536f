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
#include <numeric>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <gtest/gtest.h>
#include <mpfr.h>

#include "ptx/discrepancy.hpp"
#include "ptx/ecdf.hpp"
#include "ptx/logspace.hpp"
#include "ptx/models/survival.hpp"

namespace ptx {
namespace {

// 2 log|p - exp(l)| in 512-bit arithmetic.
double mpfr_cvm(double p, double l) {
  mpfr_t a, b;
  mpfr_inits2(512, a, b, (mpfr_ptr)0);
  mpfr_set_d(b, l, MPFR_RNDN);
  mpfr_exp(b, b, MPFR_RNDN);
  mpfr_set_d(a, p, MPFR_RNDN);
  mpfr_sub(a, a, b, MPFR_RNDN);
  mpfr_abs(a, a, MPFR_RNDN);
  mpfr_log(a, a, MPFR_RNDN);
  mpfr_mul_ui(a, a, 2, MPFR_RNDN);
  double r = mpfr_get_d(a, MPFR_RNDN);
  mpfr_clears(a, b, (mpfr_ptr)0);
  return r;
}

TargetSet normal_target() {
  return TargetSet(TargetSpec(MixtureSpec::single(DistSpec::normal(0, 1)), Support::real_line()));
}

// Predictive sampler identical in law to the standard normal target.
PredictiveSampler normal_sampler() {
  return [](std::span<const double>, std::size_t, std::size_t n, Rng& rng) {
    std::vector<double> y(n);
    for (double& v : y) v = rng.normal();
    return y;
  };
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double median_pt_discrepancy(std::size_t s, std::size_t i, int seeds) {
  DiscrepancyConfig cfg;
  cfg.n_predictive = s;
  cfg.n_importance = i;
  DiscrepancyEvaluator ev(normal_target(), normal_sampler(), cfg);
  std::vector<double> d;
  for (int k = 0; k < seeds; ++k) d.push_back(std::exp(ev.evaluate({}, 500 + k).log_D));
  return median(d);
}

TEST(Discrepancy, CvmTermExamples) {
  EXPECT_NEAR(log_cvm_term(0.5, std::log(0.25)), 2 * std::log(0.25), 1e-14);
  EXPECT_NEAR(log_cvm_term(0.5, std::log(0.25)), -2.7726, 1e-4);
  EXPECT_EQ(log_cvm_term(0.25, std::log(0.25)), kLogFloor);
  EXPECT_EQ(log_cvm_term(0.0, -1e6), -2e6);
  EXPECT_EQ(log_cvm_term(0.0, kNegInf), kLogFloor);
}

TEST(Discrepancy, CvmTermAgainstExtendedPrecision) {
  struct Case { double p, l; };
  const Case cases[] = {{0.3, -1.2},   {1e-17, -40.0}, {1e-4, -9.2},      {0.999, -1e-3},
                        {1.0, -1e-12}, {0.0, -700.0},  {2e-300, -690.0},  {0.5, -0.6931}};
  for (const auto& c : cases) {
    double ref = mpfr_cvm(c.p, c.l);
    EXPECT_NEAR(log_cvm_term(c.p, c.l), ref, 1e-10 * std::max(1.0, std::abs(ref)))
        << c.p << " " << c.l;
  }
}

TEST(Discrepancy, AdTermExamples) {
  AdTerm a = log_ad_term(0.5, std::log(0.25));
  EXPECT_NEAR(a.value, std::log(1.0 / 3.0), 1e-14);
  EXPECT_FALSE(a.fallback);
  AdTerm f = log_ad_term(0.8, 0.0);
  EXPECT_TRUE(f.fallback);
  EXPECT_EQ(f.value, log_cvm_term(0.8, 0.0));
  EXPECT_TRUE(log_ad_term(0.1, kNegInf).fallback);
}

TEST(Discrepancy, AdBoundedBelowByCvmPlusLogFour) {
  Rng r(1);
  for (int k = 0; k < 10000; ++k) {
    double t = 1e-6 + (1 - 2e-6) * r.uniform();
    double p = std::floor(r.uniform() * 1001) / 1000;
    double l = std::log(t);
    double cvm = log_cvm_term(p, l);
    if (cvm == kLogFloor) continue;
    ASSERT_GE(log_ad_term(p, l).value - cvm, std::log(4.0) - 1e-9) << p << " " << t;
  }
}

TEST(Discrepancy, MatchedPredictiveWithinEcdfNoise) {
  const std::size_t s = 10000;
  // Oracle: mean squared ECDF error over a target-quantile grid, 100 seeds.
  boost::math::normal_distribution<> nd;
  const int grid = 2000;
  std::vector<double> ys(grid);
  for (int g = 0; g < grid; ++g) ys[g] = boost::math::quantile(nd, (g + 0.5) / grid);
  double noise = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng r(9000 + k);
    std::vector<double> x(s);
    for (double& v : x) v = r.normal();
    Ecdf e(std::move(x));
    double acc = 0.0;
    for (int g = 0; g < grid; ++g) {
      double d = e.eval(ys[g]) - (g + 0.5) / grid;
      acc += d * d;
    }
    noise += acc / grid / 100.0;
  }
  DiscrepancyConfig cfg;
  cfg.n_predictive = s;
  cfg.n_importance = 5000;
  DiscrepancyEvaluator ev(normal_target(), normal_sampler(), cfg);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    double d = std::exp(ev.evaluate({}, seed).log_D);
    EXPECT_LE(d, 10 * noise) << "noise " << noise;
  }
}

TEST(Discrepancy, DoublingSampleSizeHalvesDiscrepancy) {
  double a = median_pt_discrepancy(10000, 5000, 50);
  double b = median_pt_discrepancy(20000, 5000, 50);
  EXPECT_NEAR(b / a, 0.5, 0.15);
}

TEST(Discrepancy, ConsistentAsBudgetsGrow) {
  double a = median_pt_discrepancy(1000, 1000, 50);
  double b = median_pt_discrepancy(10000, 10000, 50);
  EXPECT_LT(b, a);
}

TEST(Discrepancy, DeterministicAndThreadInvariant) {
  std::vector<CovariateRow> rows;
  std::vector<TargetSpec> ts;
  for (int r = 0; r < 5; ++r) {
    rows.push_back({{double(r)}, std::nullopt});
    ts.emplace_back(MixtureSpec::single(DistSpec::normal(r, 1 + r)), Support::real_line());
  }
  TargetSet targets(rows, ts);
  PredictiveSampler smp = [](std::span<const double> lam, std::size_t row, std::size_t n,
                             Rng& rng) {
    std::vector<double> y(n);
    for (double& v : y) v = lam[0] + row + rng.normal();
    return y;
  };
  DiscrepancyConfig cfg;
  cfg.n_predictive = 2000;
  cfg.n_importance = 1000;
  std::vector<double> lam = {0.3};
  double a = log_total_discrepancy(lam, targets, smp, cfg, 11).log_D;
  double b = log_total_discrepancy(lam, targets, smp, cfg, 11).log_D;
  cfg.row_threads = 3;
  auto c = log_total_discrepancy(lam, targets, smp, cfg, 11);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c.log_D);
  EXPECT_NE(a, log_total_discrepancy(lam, targets, smp, cfg, 12).log_D);
  EXPECT_NEAR(c.log_D, log_sum_exp(c.per_row) - std::log(5.0), 1e-15);
  EXPECT_EQ(c.per_row.size(), 5u);
  EXPECT_EQ(c.ess.size(), 5u);
}

TEST(Discrepancy, RowPermutationInvariance) {
  const std::vector<double> means = {-2.0, 0.5, 3.0, 1.0};
  const std::vector<double> sds = {1.0, 2.0, 0.5, 1.5};
  auto build = [&](const std::vector<std::size_t>& order) {
    std::vector<CovariateRow> rows;
    std::vector<TargetSpec> ts;
    std::vector<double> m;
    for (std::size_t i : order) {
      rows.push_back({{means[i]}, std::uint64_t(100 + i)});
      ts.emplace_back(MixtureSpec::single(DistSpec::normal(means[i], sds[i])),
                      Support::real_line());
      m.push_back(means[i]);
    }
    PredictiveSampler smp = [m](std::span<const double> lam, std::size_t row, std::size_t n,
                                Rng& rng) {
      std::vector<double> y(n);
      for (double& v : y) v = m[row] + lam[0] * rng.normal();
      return y;
    };
    return std::make_pair(TargetSet(rows, ts), smp);
  };
  DiscrepancyConfig cfg;
  cfg.n_predictive = 3000;
  cfg.n_importance = 1500;
  std::vector<double> lam = {1.3};
  auto [t1, s1] = build({0, 1, 2, 3});
  auto [t2, s2] = build({2, 0, 3, 1});
  double a = log_total_discrepancy(lam, t1, s1, cfg, 5).log_D;
  double b = log_total_discrepancy(lam, t2, s2, cfg, 5).log_D;
  EXPECT_LT(std::abs(a - b), 1e-12);
}

TEST(Discrepancy, CachedTargetsAreReused) {
  DiscrepancyConfig cfg;
  cfg.n_predictive = 1000;
  cfg.n_importance = 500;
  cfg.cache_target_samples = true;
  cfg.target_cache_seed = 3;
  DiscrepancyEvaluator ev(normal_target(), normal_sampler(), cfg);
  EXPECT_EQ(ev.evaluate({}, 1).log_D, ev.evaluate({}, 1).log_D);
}

TEST(Discrepancy, NonFiniteDrawNamesRow) {
  PredictiveSampler bad = [](std::span<const double>, std::size_t, std::size_t n, Rng&) {
    std::vector<double> y(n, 0.0);
    y[n / 2] = std::nan("");
    return y;
  };
  DiscrepancyConfig cfg;
  cfg.n_predictive = 10;
  cfg.n_importance = 10;
  try {
    log_total_discrepancy({}, normal_target(), bad, cfg, 1);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("row 0"), std::string::npos);
  }
}

TEST(Discrepancy, AllTermsNegInfGivesFloor) {
  auto cdf = [](double y) { return y <= 0 ? 0.0 : (y >= 1 ? 1.0 : y); };
  auto dens = [](double) { return 0.0; };
  auto smp = [](Rng& r) { return r.uniform(); };
  TargetSet ts(TargetSpec::from_cdf(cdf, dens, smp, Support::bounded(1.0)));
  PredictiveSampler p = [](std::span<const double>, std::size_t, std::size_t n, Rng& r) {
    std::vector<double> y(n);
    for (double& v : y) v = r.uniform();
    return y;
  };
  DiscrepancyConfig cfg;
  cfg.n_predictive = 100;
  cfg.n_importance = 100;
  auto est = log_total_discrepancy({}, ts, p, cfg, 1);
  EXPECT_EQ(est.log_D, kLogFloor);
  EXPECT_FALSE(est.diagnostics.empty());
}

TEST(Discrepancy, AdFallsBackAtCensoringAtom) {
  const double c = 20.0;
  TargetSet ts(survival_target(c));
  PredictiveSampler p = [c](std::span<const double>, std::size_t, std::size_t n, Rng& r) {
    std::vector<double> y(n);
    for (double& v : y) v = std::min(c, std::exp(1.0 + 0.8 * r.normal()));
    return y;
  };
  DiscrepancyConfig cfg;
  cfg.n_predictive = 2000;
  cfg.n_importance = 2000;
  cfg.kind = DiscrepancyKind::kAD;
  auto ad = log_total_discrepancy({}, ts, p, cfg, 2);
  EXPECT_GT(ad.n_fallbacks, 0u);
  EXPECT_TRUE(std::isfinite(ad.log_D));
  cfg.kind = DiscrepancyKind::kCvM;
  auto cvm = log_total_discrepancy({}, ts, p, cfg, 2);
  EXPECT_EQ(cvm.n_fallbacks, 0u);
  EXPECT_GT(ad.log_D, cvm.log_D);
}

TEST(Discrepancy, RejectsZeroCounts) {
  DiscrepancyConfig cfg;
  cfg.n_predictive = 0;
  EXPECT_THROW(DiscrepancyEvaluator(normal_target(), normal_sampler(), cfg),
               std::invalid_argument);
}

TEST(Discrepancy, AcceptsFullSurvivalBudgets) {
  DiscrepancyConfig cfg;
  cfg.n_predictive = 10000;
  cfg.n_importance = 5000;
  SurvivalData data = simulate_survival_data(3, 2, 1);
  Problem pr = make_survival_problem(data);
  EXPECT_NO_THROW(DiscrepancyEvaluator(pr.targets, pr.predictive, cfg));
}

}  // namespace
}  // namespace ptx
