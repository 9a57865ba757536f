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

#include "ptx/models/preece_baines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>


namespace ptx {
namespace {

constexpr const char* kThetaNames[5] = {"h0", "delta_h", "s0", "delta_s", "gamma"};
constexpr int kMaxRedraws = 1000;

}  // namespace

double pb_height(double t, const PbTheta& th) {
  const double h0 = th[0];
  const double dh = th[1];
  const double s0 = th[2];
  const double s1 = th[2] + th[3];
  const double u = t - th[4];
  // h0 + delta_h (1 - 2 / (e0 + e1)), written with expm1 so the fraction is
  // exactly zero at t = gamma. Overflow maps to the upper asymptote.
  const double num = std::expm1(s0 * u) + std::expm1(s1 * u);
  const double frac = std::isfinite(num) ? num / (2.0 + num) : 1.0;
  return h0 + dh * frac;
}

Bounds pb_bounds() {
  const double e = kPbEpsilon;
  std::vector<double> lo = {130.0, e, e, e, e, e, e, e, 9.0, e};
  std::vector<double> hi = {185.0, 30.0, 30.0, 2.0, 0.2, 0.1, 1.5, 0.2, 15.0, 1.0};
  std::vector<std::string> names;
  for (const char* n : kThetaNames) {
    names.push_back(std::string(n) + "_mean");
    names.push_back(std::string(n) + "_sd");
  }
  return Bounds(std::move(lo), std::move(hi), std::move(names));
}

std::array<double, 2> pb_lognormal_params(double mean, double sd) {
  if (!(mean > 0.0) || !(sd > 0.0)) {
    throw std::invalid_argument("preece_baines: mean and sd must be positive");
  }
  const double r = sd / mean;
  const double v = std::log1p(r * r);
  return {std::log(mean) - 0.5 * v, std::sqrt(v)};
}

PbTheta pb_draw_theta(std::span<const double> lambda, Rng& rng) {
  if (lambda.size() != 10) throw std::invalid_argument("preece_baines: lambda needs 10 entries");
  PbTheta th;
  for (int q = 0; q < 5; ++q) {
    auto [mu, sigma] = pb_lognormal_params(lambda[2 * q], lambda[2 * q + 1]);
    th[q] = std::exp(mu + sigma * rng.normal());
  }
  return th;
}

std::vector<double> pb_target_ages() { return {2.0, 8.0, 13.0, 18.0}; }

TargetSet pb_covariate_targets() {
  const double mean[4] = {88.0, 130.0, 160.0, 172.0};
  const double sd[4] = {3.5, 5.5, 8.0, 9.5};
  std::vector<double> ages = pb_target_ages();
  std::vector<CovariateRow> rows;
  std::vector<TargetSpec> targets;
  for (int r = 0; r < 4; ++r) {
    rows.push_back({{ages[r]}, std::nullopt});
    targets.emplace_back(MixtureSpec::single(DistSpec::normal(mean[r], sd[r])),
                         Support::real_line(), "age " + std::to_string(int(ages[r])));
  }
  return TargetSet(std::move(rows), std::move(targets));
}

TargetSpec pb_population_target() {
  // The published weights sum to 1.01 and are renormalised.
  const double w[3] = {0.38, 0.36, 0.27};
  const double total = w[0] + w[1] + w[2];
  std::vector<MixtureComponent> comps = {
      {w[0] / total, DistSpec::gamma(45.49, 0.44)},
      {w[1] / total, DistSpec::gamma(115.41, 0.81)},
      {w[2] / total, DistSpec::gamma(277.51, 1.64)},
  };
  return TargetSpec(MixtureSpec(std::move(comps)), Support::positive_half_line(),
                    "population");
}

PredictiveSampler pb_predictive(std::vector<double> ages) {
  return [ages](std::span<const double> lambda, std::size_t row, std::size_t n, Rng& rng) {
    const bool marginal = ages.empty();
    if (!marginal && row >= ages.size()) throw std::out_of_range("preece_baines: row");
    std::vector<double> out(n);
    for (std::size_t s = 0; s < n; ++s) {
      double y = 0.0;
      for (int tries = 0;; ++tries) {
        PbTheta th = pb_draw_theta(lambda, rng);
        const double sigma_y = std::exp(kPbNoiseSdlog * rng.normal());
        const double t = marginal ? rng.uniform(kPbMinAge, kPbMaxAge) : ages[row];
        y = pb_height(t, th) + sigma_y * rng.normal();
        if (std::isfinite(y)) break;
        if (tries == kMaxRedraws) {
          throw std::runtime_error("preece_baines: no finite height after redraws");
        }
      }
      out[s] = y;
    }
    return out;
  };
}

PriorModel pb_prior_model() {
  PriorModel m;
  for (const char* n : kThetaNames) m.names.push_back(n);
  m.sampler = [](std::span<const double> lambda, std::size_t n, Rng& rng) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(n), 5);
    for (std::size_t s = 0; s < n; ++s) {
      PbTheta th = pb_draw_theta(lambda, rng);
      for (int q = 0; q < 5; ++q) out(static_cast<Eigen::Index>(s), q) = th[q];
    }
    return out;
  };
  m.analytic_sd = [](std::span<const double> lambda) {
    if (lambda.size() != 10) throw std::invalid_argument("preece_baines: lambda needs 10 entries");
    std::vector<double> sd(5);
    for (int q = 0; q < 5; ++q) sd[q] = lambda[2 * q + 1];
    return sd;
  };
  return m;
}

Problem make_pb_problem(PbMode mode) {
  PriorModel prior = pb_prior_model();
  SecondaryConfig sec;
  sec.sources.assign(5, SdSource::kAnalytic);
  if (mode == PbMode::kCovariateSpecific) {
    return Problem{"preece_baines_covariate", pb_bounds(), pb_covariate_targets(),
                   pb_predictive(pb_target_ages()), std::move(prior), std::move(sec)};
  }
  return Problem{"preece_baines_population", pb_bounds(), TargetSet(pb_population_target()),
                 pb_predictive({}), std::move(prior), std::move(sec)};
}

}  // namespace ptx
