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

// Acceptance checks for the end-to-end library. Prints one PASS/FAIL line
// per criterion and exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <mpfr.h>
#include <unistd.h>

#include "ptx/artifacts.hpp"
#include "ptx/discrepancy.hpp"
#include "ptx/distributions.hpp"
#include "ptx/logspace.hpp"
#include "ptx/models/preece_baines.hpp"
#include "ptx/models/r2.hpp"
#include "ptx/models/survival.hpp"
#include "ptx/pareto.hpp"
#include "ptx/pipeline.hpp"

namespace ptx {
namespace {

// Tolerances and budgets.
constexpr int kC1Sets = 200;
constexpr std::size_t kC1MaxPoints = 64;
constexpr int kC1HvFronts = 50;
constexpr int kC1HvSamplesSide = 1000;  // 10^6 points
constexpr double kC1HvRelTol = 0.01;
constexpr double kC1MaxSeconds = 30;

constexpr int kC2Pairs = 10000;
constexpr double kC2AdTol = 1e-9;
constexpr double kC2ShiftTol = 1e-12;
constexpr double kC2CvmRelTol = 1e-6;
constexpr double kC2MaxSeconds = 10;

constexpr int kC3Seeds = 50;
constexpr std::size_t kC3SmallS = 1000;
constexpr std::size_t kC3LargeS = 2000;
constexpr std::size_t kC3Importance = 2000;
constexpr double kC3RatioLow = 2.0 * 0.7;
constexpr double kC3RatioHigh = 2.0 * 1.3;
constexpr double kC3MaxSeconds = 120;

constexpr double kC4Expected = 0.9982;
constexpr double kC4Tol = 0.0002;

constexpr std::size_t kR2N = 50;
constexpr std::size_t kR2P = 80;
constexpr std::uint64_t kR2DataSeed = 20240101;
const std::vector<double> kR2Lambda0 = {50.0, 5.0, 5.0};
constexpr std::size_t kR2TargetDraws = 100000;
constexpr std::size_t kC5S = 2000;
constexpr std::size_t kC5I = 500;
constexpr std::size_t kC5Crs2 = 300;
constexpr std::size_t kC5Bo = 50;
constexpr double kC5Kappa = 0.1;
constexpr int kC5ReevalsRef = 50;
constexpr int kC5ReevalsOpt = 20;
constexpr double kC5SdMultiplier = 2.0;
constexpr double kC5MaxSeconds = 300;

constexpr int kC6IdentityDraws = 1000;
constexpr std::size_t kC6Crs2 = 2000 / 4;
constexpr std::size_t kC6Batches = 2;  // 5 / 4 rounded up
constexpr std::size_t kC6Bo = 63;      // 250 / 4 rounded up
constexpr std::size_t kC6S = 50000 / 4;
constexpr std::size_t kC6I = 5000 / 4;
constexpr std::size_t kC6Design = 50;
constexpr double kC6Kappa = 0.1;
constexpr int kC6RandomLambdas = 100;
constexpr int kC6Reevals = 10;
constexpr double kC6MinImprovement = 3.0;
constexpr double kC6MaxSeconds = 600;

constexpr std::size_t kC7TargetDraws = 100000;
constexpr double kC7AtomTol = 0.003;
constexpr int kC7Lambdas = 10;
constexpr std::size_t kC7Predictive = 20000;
constexpr std::size_t kC7Oracle = 200000;
constexpr double kC7Ses = 3.0;
constexpr double kC7MaxSeconds = 120;

constexpr int kC8Replicates = 5;
constexpr double kC8MaxSd = 0.5;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char b[64];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / v.size();
}

double sd_of(const std::vector<double>& v) {
  double m = mean_of(v), s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / (v.size() - 1));
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> reevaluate(const DiscrepancyEvaluator& ev, std::span<const double> lambda,
                               int count, std::uint64_t base) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(ev.evaluate(lambda, base + i).log_D);
  return out;
}

// ---- 1

Outcome criterion1() {
  auto t0 = Clock::now();
  Rng rng(101);
  int mismatches = 0;
  for (int s = 0; s < kC1Sets; ++s) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * kC1MaxPoints);
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {std::floor(rng.uniform() * 10), std::floor(rng.uniform() * 10)};
    if (s % 2) {
      for (auto& p : pts) p = {rng.normal(), rng.normal()};
    }
    std::vector<std::size_t> brute;
    for (std::size_t i = 0; i < n; ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < n && !dominated; ++j) dominated = dominates(pts[j], pts[i]);
      if (!dominated) brute.push_back(i);
    }
    mismatches += pareto_front(pts) != brute;
  }
  double worst = 0.0;
  for (int f = 0; f < kC1HvFronts; ++f) {
    int n = 1 + f % 6;
    std::vector<Point2> front(n);
    for (int i = 0; i < n; ++i) {
      double t = (i + 0.2 + 0.6 * rng.uniform()) / n;
      front[i] = {t, (1 - t) * (1 - t) * (0.5 + rng.uniform())};
    }
    auto idx = pareto_front(front);
    std::vector<Point2> nd;
    for (auto i : idx) nd.push_back(front[i]);
    Point2 ref = {1.1, 1.6};
    auto contrib = hypervolume_contribution(nd, ref);
    // HV(S) - HV(S \ {i}) is the part of the box [p_i, ref] no other point dominates.
    const long m = static_cast<long>(kC1HvSamplesSide) * kC1HvSamplesSide;
    for (std::size_t i = 0; i < nd.size(); ++i) {
      const double w = ref[0] - nd[i][0], h = ref[1] - nd[i][1];
      long exclusive = 0;
      for (long k = 0; k < m; ++k) {
        double x = nd[i][0] + w * ((k % kC1HvSamplesSide) + rng.uniform()) / kC1HvSamplesSide;
        double y = nd[i][1] + h * ((k / kC1HvSamplesSide) + rng.uniform()) / kC1HvSamplesSide;
        bool covered = false;
        for (std::size_t j = 0; j < nd.size() && !covered; ++j) {
          covered = j != i && x >= nd[j][0] && y >= nd[j][1];
        }
        exclusive += !covered;
      }
      double mc = w * h * exclusive / static_cast<double>(m);
      worst = std::max(worst, std::abs(mc - contrib[i]) / contrib[i]);
    }
  }
  double secs = seconds_since(t0);
  bool pass = mismatches == 0 && worst <= kC1HvRelTol && secs < kC1MaxSeconds;
  return {pass, std::to_string(mismatches) + " front mismatches in " + std::to_string(kC1Sets) +
                    " sets; worst hypervolume error " + fmt("%.4f", worst * 100) + "%; " +
                    fmt("%.1f", secs) + " s"};
}

// ---- 2

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

Outcome criterion2() {
  auto t0 = Clock::now();
  Rng rng(202);
  double worst_ad = INFINITY;
  for (int k = 0; k < kC2Pairs; ++k) {
    double t = 1e-6 + (1 - 2e-6) * rng.uniform();
    double p = rng.uniform();
    double l = std::log(t);
    double cvm = log_cvm_term(p, l);
    if (cvm == kLogFloor) continue;
    worst_ad = std::min(worst_ad, log_ad_term(p, l).value - cvm - std::log(4.0));
  }
  double worst_shift = 0.0;
  for (int k = 0; k < 1000; ++k) {
    std::vector<double> v(1 + k % 50);
    for (double& x : v) x = 50 * rng.normal();
    double c = 1000 * rng.normal();
    double a = log_sum_exp(v);
    for (double& x : v) x += c;
    worst_shift = std::max(worst_shift, std::abs(log_sum_exp(v) - (a + c)) / std::max(1.0, std::abs(a + c)));
  }
  double worst_cvm = 0.0;
  for (double p : {0.0, 1e-300, 1e-20, 0.3, 1.0}) {
    double ref = mpfr_cvm(p, -1e6);
    worst_cvm = std::max(worst_cvm, std::abs(log_cvm_term(p, -1e6) - ref) / std::abs(ref));
  }
  double secs = seconds_since(t0);
  bool pass = worst_ad >= -kC2AdTol && worst_shift <= kC2ShiftTol && worst_cvm <= kC2CvmRelTol &&
              secs < kC2MaxSeconds;
  return {pass, "min(AD - CvM - log 4) = " + fmt("%.3g", worst_ad) + "; shift error " +
                    fmt("%.3g", worst_shift) + "; CvM relative error at -1e6 " +
                    fmt("%.3g", worst_cvm) + "; " + fmt("%.2f", secs) + " s"};
}

// ---- 3

Outcome criterion3() {
  auto t0 = Clock::now();
  TargetSet target(TargetSpec(MixtureSpec::single(DistSpec::normal(0, 1)), Support::real_line()));
  const TargetSpec& t = target.target(0);
  PredictiveSampler own = [t](std::span<const double>, std::size_t, std::size_t n, Rng& rng) {
    return t.sample(n, rng);
  };
  auto median_d = [&](std::size_t s) {
    DiscrepancyConfig cfg;
    cfg.n_predictive = s;
    cfg.n_importance = kC3Importance;
    DiscrepancyEvaluator ev(target, own, cfg);
    std::vector<double> d;
    for (int k = 0; k < kC3Seeds; ++k) d.push_back(std::exp(ev.evaluate({}, 3000 + k).log_D));
    return median_of(d);
  };
  double a = median_d(kC3SmallS), b = median_d(kC3LargeS);
  double ratio = a / b;
  double secs = seconds_since(t0);
  bool pass = ratio >= kC3RatioLow && ratio <= kC3RatioHigh && secs < kC3MaxSeconds;
  return {pass, "median D " + fmt("%.3g", a) + " -> " + fmt("%.3g", b) + ", ratio " +
                    fmt("%.3f", ratio) + "; " + fmt("%.1f", secs) + " s"};
}

// ---- 4

Outcome criterion4() {
  double f = std::exp(log_cdf(DistSpec::lognormal(std::log(3.0), 2.0 / 3.0), 21.0));
  return {std::abs(f - kC4Expected) <= kC4Tol, "CDF(21) = " + fmt("%.6f", f)};
}

// ---- 5 and 8

struct R2Setup {
  Problem problem;
  DiscrepancyEvaluator evaluator;
  std::vector<double> ref_logd;
};

PipelineConfig r2_pipeline(std::uint64_t seed) {
  PipelineConfig c;
  c.discrepancy.n_predictive = kC5S;
  c.discrepancy.n_importance = kC5I;
  c.optimizer.n_crs2 = kC5Crs2;
  c.optimizer.n_batch = 1;
  c.optimizer.n_bo = kC5Bo;
  c.kappas = {kC5Kappa};
  c.seed = seed;
  return c;
}

R2Setup& r2_setup() {
  static R2Setup* s = [] {
    Eigen::MatrixXd x = simulate_r2_design(kR2N, kR2P, kR2DataSeed);
    TargetSpec target =
        r2_moment_target(R2Prior::kGaussian, kR2Lambda0, x, kR2TargetDraws, kR2DataSeed + 1);
    Problem p = make_r2_problem(R2Prior::kGaussian, x, target);
    DiscrepancyConfig dc = r2_pipeline(0).discrepancy;
    auto* out = new R2Setup{p, DiscrepancyEvaluator(p.targets, p.predictive, dc), {}};
    out->ref_logd = reevaluate(out->evaluator, kR2Lambda0, kC5ReevalsRef, 50000);
    return out;
  }();
  return *s;
}

// Mean of fresh re-evaluations at the selected optimum of one replicate.
double r2_replicate(std::uint64_t seed, std::vector<double>* lambda_star) {
  R2Setup& s = r2_setup();
  RunResult r = pbbo_run(s.problem, r2_pipeline(seed));
  const FrontierPoint& opt = r.optimum(0);
  if (lambda_star) *lambda_star = opt.lambda;
  return mean_of(reevaluate(s.evaluator, opt.lambda, kC5ReevalsOpt, 70000));
}

std::vector<double> g_replicate_logd;

Outcome criterion5() {
  auto t0 = Clock::now();
  R2Setup& s = r2_setup();
  double ref_mean = mean_of(s.ref_logd), ref_sd = sd_of(s.ref_logd);
  std::vector<double> lam;
  double opt = r2_replicate(derive_seed(5, {0}), &lam);
  g_replicate_logd.push_back(opt);
  double bound = ref_mean + kC5SdMultiplier * ref_sd;
  double secs = seconds_since(t0);
  std::ostringstream os;
  os << "log_D(lambda*) = " << fmt("%.3f", opt) << " at (" << fmt("%.3g", lam[0]) << ", "
     << fmt("%.3g", lam[1]) << ", " << fmt("%.3g", lam[2]) << "); bound "
     << fmt("%.3f", bound) << " (lambda0 mean " << fmt("%.3f", ref_mean) << ", sd "
     << fmt("%.3f", ref_sd) << "); " << fmt("%.1f", secs) << " s";
  bool pass = opt <= bound && secs < kC5MaxSeconds;
  return {pass, os.str()};
}

Outcome criterion8() {
  auto t0 = Clock::now();
  for (int i = static_cast<int>(g_replicate_logd.size()); i < kC8Replicates; ++i) {
    g_replicate_logd.push_back(r2_replicate(derive_seed(5, {std::uint64_t(i)}), nullptr));
  }
  double sd = sd_of(g_replicate_logd);
  std::ostringstream os;
  os << "log_D(lambda*) over " << kC8Replicates << " replicates:";
  for (double v : g_replicate_logd) os << " " << fmt("%.3f", v);
  os << "; sd " << fmt("%.3f", sd) << "; " << fmt("%.1f", seconds_since(t0)) << " s";
  return {sd <= kC8MaxSd, os.str()};
}

// ---- 6

Outcome criterion6() {
  auto t0 = Clock::now();
  Rng rng(606);
  int identity_failures = 0;
  for (int i = 0; i < kC6IdentityDraws; ++i) {
    PbTheta th = {50 + 150 * rng.uniform(), 40 * rng.uniform(), 2 * rng.uniform(),
                  3 * rng.uniform(), 2 + 16 * rng.uniform()};
    identity_failures += pb_height(th[4], th) != th[0];
  }

  Problem p = make_pb_problem(PbMode::kCovariateSpecific);
  PipelineConfig c;
  c.discrepancy.n_predictive = kC6S;
  c.discrepancy.n_importance = kC6I;
  c.optimizer.n_crs2 = kC6Crs2;
  c.optimizer.n_batch = kC6Batches;
  c.optimizer.n_bo = kC6Bo;
  c.optimizer.n_design = kC6Design;
  c.kappas = {kC6Kappa};
  c.seed = 66;
  DiscrepancyEvaluator ev(p.targets, p.predictive, c.discrepancy);

  std::vector<double> random_logd;
  for (int i = 0; i < kC6RandomLambdas; ++i) {
    std::vector<double> lam(p.bounds.dim());
    for (std::size_t d = 0; d < lam.size(); ++d) {
      lam[d] = rng.uniform(p.bounds.lower()[d], p.bounds.upper()[d]);
    }
    random_logd.push_back(ev.evaluate(lam, 80000 + i).log_D);
  }
  double random_median = median_of(random_logd);

  RunResult r = pbbo_run(p, c);
  const FrontierPoint& opt = r.optimum(0);
  double opt_logd = mean_of(reevaluate(ev, opt.lambda, kC6Reevals, 90000));
  double gain = random_median - opt_logd;
  double secs = seconds_since(t0);
  bool pass = identity_failures == 0 && gain >= kC6MinImprovement && secs < kC6MaxSeconds;
  return {pass, std::to_string(identity_failures) + " identity failures; log_D(lambda*) " +
                    fmt("%.3f", opt_logd) + " vs random median " + fmt("%.3f", random_median) +
                    " (gain " + fmt("%.2f", gain) + " nats); " + fmt("%.1f", secs) + " s"};
}

// ---- 7

Outcome criterion7() {
  auto t0 = Clock::now();
  SurvivalData data = simulate_survival_data(kC7Lambdas, 4, 707);
  Rng rng(77);
  TargetSpec t = survival_target(data.censoring[0]);
  auto y = t.sample(kC7TargetDraws, rng);
  double atom = std::count(y.begin(), y.end(), data.censoring[0]) / double(y.size());

  PredictiveSampler smp = survival_predictive(data);
  Bounds b = survival_bounds(4);
  double worst_z = 0.0;
  bool in_support = true;
  for (int k = 0; k < kC7Lambdas; ++k) {
    std::vector<double> lam(b.dim());
    for (std::size_t d = 0; d < lam.size(); ++d) lam[d] = rng.uniform(b.lower()[d], b.upper()[d]);
    const double c = data.censoring[k];
    Eigen::VectorXd x = data.covariates.row(k).transpose();
    SurvivalPrior prior(lam, 4);
    double acc = 0.0;
    for (std::size_t i = 0; i < kC7Oracle; ++i) {
      SurvivalTheta th = prior.draw(rng);
      double lp = th.beta0 + x.dot(th.beta);
      acc += th.pi + (1.0 - th.pi) * std::exp(-std::exp(th.gamma * std::log(c) + lp));
    }
    double oracle = acc / kC7Oracle;
    auto draws = smp(lam, k, kC7Predictive, rng);
    double frac = 0.0;
    for (double v : draws) {
      in_support = in_support && v > 0.0 && v <= c;
      frac += v == c;
    }
    frac /= draws.size();
    double se = std::sqrt(oracle * (1 - oracle) / kC7Predictive + 0.25 / kC7Oracle);
    if (se > 0) worst_z = std::max(worst_z, std::abs(frac - oracle) / se);
    else if (frac != oracle) worst_z = INFINITY;
  }
  double secs = seconds_since(t0);
  bool pass = std::abs(atom - 0.05) <= kC7AtomTol && worst_z <= kC7Ses && in_support &&
              secs < kC7MaxSeconds;
  return {pass, "atom fraction " + fmt("%.4f", atom) + "; worst censored-fraction z " +
                    fmt("%.2f", worst_z) + "; " + fmt("%.1f", secs) + " s"};
}

// ---- 9

Outcome criterion9() {
  SurvivalData data = simulate_survival_data(6, 2, 909);
  Problem p = make_survival_problem(data);
  PipelineConfig c;
  c.discrepancy.n_predictive = 400;
  c.discrepancy.n_importance = 200;
  c.optimizer.n_crs2 = 120;
  c.optimizer.n_batch = 2;
  c.optimizer.n_bo = 5;
  c.optimizer.n_design = 30;
  c.optimizer.n_new = 200;
  c.seed = 99;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("ptx_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  std::vector<std::string> text;
  for (int run = 0; run < 2; ++run) {
    RunResult r = pbbo_run(p, c);
    fs::path f = dir / ("frontier_" + std::to_string(run) + ".csv");
    write_frontier_csv(f, p.bounds.names(), r.frontier);
    std::ifstream in(f, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    text.push_back(ss.str());
  }
  fs::remove_all(dir);
  bool pass = !text[0].empty() && text[0] == text[1];
  return {pass, std::to_string(text[0].size()) + " bytes, " +
                    (text[0] == text[1] ? "identical" : "different")};
}

}  // namespace
}  // namespace ptx

int main() {
  using ptx::Outcome;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, ptx::criterion1}, {2, ptx::criterion2}, {3, ptx::criterion3},
      {4, ptx::criterion4}, {5, ptx::criterion5}, {6, ptx::criterion6},
      {7, ptx::criterion7}, {8, ptx::criterion8}, {9, ptx::criterion9}};
  int failures = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
