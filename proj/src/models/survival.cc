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

#include "ptx/models/survival.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ptx {
namespace {

constexpr double kLogNormalLocation = 1.0986122886681098;  // log 3
constexpr double kLogNormalScale = 2.0 / 3.0;

std::string dump_theta(const SurvivalTheta& t) {
  std::ostringstream os;
  os.precision(17);
  os << "theta = (pi=" << t.pi << ", gamma=" << t.gamma << ", beta_0=" << t.beta0;
  for (int j = 0; j < t.beta.size(); ++j) os << ", beta_" << j + 1 << "=" << t.beta[j];
  os << ")";
  return os.str();
}

}  // namespace

SurvivalData simulate_survival_data(std::size_t n, int b, std::uint64_t seed) {
  if (n < 1 || b < 1) throw std::invalid_argument("survival: need n, b >= 1");
  Rng rng(seed);
  Rng crng = rng.split(1);
  Rng qrng = rng.split(2);
  Rng xrng = rng.split(3);
  SurvivalData d;
  d.censoring.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) d.censoring[i] = 20.0 + crng.exponential();
  Eigen::MatrixXd l = lkj_corr_cholesky_rng(b, 5.0, qrng);
  d.correlation = l * l.transpose();
  d.covariates.resize(static_cast<Eigen::Index>(n), b);
  Eigen::VectorXd z(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < b; ++j) z[j] = xrng.normal();
    d.covariates.row(static_cast<Eigen::Index>(i)) = (l * z).transpose();
  }
  return d;
}

TargetSpec survival_target(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("survival target: censoring time must be positive");
  }
  DistSpec ln = DistSpec::lognormal(kLogNormalLocation, kLogNormalScale).truncated_above(c);
  MixtureSpec m({{1.0 - kSurvivalCureMass, ln}}, {{kSurvivalCureMass, c}});
  return TargetSpec(std::move(m), Support::bounded(c, {c}), "survival");
}

std::size_t survival_lambda_dim(int b) {
  return static_cast<std::size_t>(5 + lkj_size(b) + b + 2);
}

Bounds survival_bounds(int b) {
  const double e = kSurvivalEpsilon;
  std::vector<double> lo = {e, e, -10.0, e, e};
  std::vector<double> hi = {20.0, 20.0, 10.0, 10.0, 10.0};
  std::vector<std::string> names = {"alpha", "beta", "mu_0", "sigma_0", "s_beta"};
  for (int i = 0; i < lkj_size(b); ++i) {
    lo.push_back(-1.0 + e);
    hi.push_back(1.0 - e);
    names.push_back("omega_" + std::to_string(i + 1));
  }
  for (int i = 0; i < b; ++i) {
    lo.push_back(-5.0);
    hi.push_back(5.0);
    names.push_back("eta_" + std::to_string(i + 1));
  }
  lo.insert(lo.end(), {1.0, 1.0});
  hi.insert(hi.end(), {50.0, 50.0});
  names.insert(names.end(), {"a_pi", "b_pi"});
  return Bounds(std::move(lo), std::move(hi), std::move(names));
}

namespace {

MvSkewNormal make_skew(std::span<const double> lambda, int b) {
  if (lambda.size() != survival_lambda_dim(b)) {
    throw std::invalid_argument("survival: lambda has " + std::to_string(lambda.size()) +
                                " entries, expected " +
                                std::to_string(survival_lambda_dim(b)));
  }
  const double s = lambda[4];
  Eigen::MatrixXd l = lkj_partial_to_cholesky(lambda.subspan(5, lkj_size(b)), b);
  Eigen::MatrixXd scale = s * s * (l * l.transpose());
  Eigen::VectorXd slant(b);
  for (int j = 0; j < b; ++j) slant[j] = lambda[5 + lkj_size(b) + j];
  return MvSkewNormal(scale, slant);
}

}  // namespace

SurvivalPrior::SurvivalPrior(std::span<const double> lambda, int b)
    : b_(b),
      alpha_(lambda[0]),
      beta_(lambda[1]),
      mu0_(lambda[2]),
      sigma0_(lambda[3]),
      a_pi_(lambda[lambda.size() - 2]),
      b_pi_(lambda[lambda.size() - 1]),
      skew_(make_skew(lambda, b)) {
  if (!(alpha_ > 0 && beta_ > 0 && sigma0_ > 0 && lambda[4] > 0 && a_pi_ > 0 && b_pi_ > 0)) {
    throw std::invalid_argument("survival: scale hyperparameters must be positive");
  }
}

SurvivalTheta SurvivalPrior::draw(Rng& rng) const {
  SurvivalTheta t;
  double lx = rng.log_gamma_variate(a_pi_);
  double ly = rng.log_gamma_variate(b_pi_);
  t.pi = 1.0 / (1.0 + std::exp(ly - lx));
  t.gamma = std::exp(rng.log_gamma_variate(alpha_) - std::log(beta_));
  t.beta0 = mu0_ + sigma0_ * rng.normal();
  t.beta.resize(b_);
  skew_.draw(rng, t.beta);
  return t;
}

std::vector<double> SurvivalPrior::analytic_sd() const {
  const double ab = a_pi_ + b_pi_;
  std::vector<double> sd = {std::sqrt(a_pi_ * b_pi_ / (ab * ab * (ab + 1.0))),
                            std::sqrt(alpha_) / beta_, sigma0_};
  Eigen::VectorXd m = skew_.marginal_sd();
  sd.insert(sd.end(), m.data(), m.data() + m.size());
  return sd;
}

double survival_observable(const SurvivalTheta& theta, double c,
                           std::span<const double> x, Rng& rng) {
  double u = rng.uniform();
  double log_e = std::log(rng.exponential());
  if (u < theta.pi) return c;
  double lp = theta.beta0;
  for (std::size_t j = 0; j < x.size(); ++j) lp += x[j] * theta.beta[static_cast<Eigen::Index>(j)];
  if (!std::isfinite(lp)) {
    throw std::runtime_error("survival: non-finite linear predictor, " + dump_theta(theta));
  }
  // S(T) = exp(-T^gamma e^lp) inverted at an Exp(1) draw.
  double num = log_e - lp;
  double log_t;
  if (theta.gamma > 0.0) {
    log_t = num / theta.gamma;
  } else {
    log_t = num > 0.0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
  }
  if (log_t >= std::log(c)) return c;
  return std::max(std::exp(log_t), std::numeric_limits<double>::denorm_min());
}

PredictiveSampler survival_predictive(const SurvivalData& data) {
  auto shared = std::make_shared<const SurvivalData>(data);
  return [shared](std::span<const double> lambda, std::size_t row, std::size_t n,
                  Rng& rng) {
    const SurvivalData& d = *shared;
    if (row >= d.size()) throw std::out_of_range("survival: row out of range");
    SurvivalPrior prior(lambda, d.dim());
    const double c = d.censoring[static_cast<Eigen::Index>(row)];
    Eigen::VectorXd x = d.covariates.row(static_cast<Eigen::Index>(row)).transpose();
    std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
    std::vector<double> out(n);
    for (std::size_t s = 0; s < n; ++s) {
      out[s] = survival_observable(prior.draw(rng), c, xs, rng);
    }
    return out;
  };
}

PriorModel survival_prior_model(int b) {
  PriorModel m;
  m.names = {"pi", "gamma", "beta_0"};
  for (int j = 0; j < b; ++j) m.names.push_back("beta_" + std::to_string(j + 1));
  m.sampler = [b](std::span<const double> lambda, std::size_t n, Rng& rng) {
    SurvivalPrior prior(lambda, b);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(n), 3 + b);
    for (std::size_t s = 0; s < n; ++s) {
      SurvivalTheta t = prior.draw(rng);
      auto i = static_cast<Eigen::Index>(s);
      out(i, 0) = t.pi;
      out(i, 1) = t.gamma;
      out(i, 2) = t.beta0;
      out.row(i).tail(b) = t.beta.transpose();
    }
    return out;
  };
  m.analytic_sd = [b](std::span<const double> lambda) {
    return SurvivalPrior(lambda, b).analytic_sd();
  };
  return m;
}

Problem make_survival_problem(const SurvivalData& data) {
  std::vector<CovariateRow> rows;
  std::vector<TargetSpec> targets;
  for (std::size_t n = 0; n < data.size(); ++n) {
    CovariateRow r;
    r.values.push_back(data.censoring[static_cast<Eigen::Index>(n)]);
    for (int j = 0; j < data.dim(); ++j) {
      r.values.push_back(data.covariates(static_cast<Eigen::Index>(n), j));
    }
    r.stream_key = n;
    rows.push_back(std::move(r));
    targets.push_back(survival_target(data.censoring[static_cast<Eigen::Index>(n)]));
  }
  PriorModel prior = survival_prior_model(data.dim());
  SecondaryConfig sec;
  sec.sources.assign(prior.names.size(), SdSource::kAnalytic);
  return Problem{"survival",
                 survival_bounds(data.dim()),
                 TargetSet(std::move(rows), std::move(targets)),
                 survival_predictive(data),
                 std::move(prior),
                 std::move(sec)};
}

}  // namespace ptx
