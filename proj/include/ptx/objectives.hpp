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

#ifndef PTX_OBJECTIVES_HPP_
#define PTX_OBJECTIVES_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ptx/rng.hpp"

namespace ptx {

enum class SdSource {
  kAnalytic,
  kMonteCarlo,
  kRobust,
  // Closed form when available (finite, positive), robust scale otherwise.
  kAnalyticOrRobust,
};

// Draws an n x Q matrix of prior parameter draws at lambda.
using PriorSampler = std::function<Eigen::MatrixXd(
    std::span<const double> lambda, std::size_t n, Rng& rng)>;
// Closed-form marginal SDs at lambda, NaN where none exists.
using AnalyticSd =
    std::function<std::vector<double>(std::span<const double> lambda)>;

struct PriorModel {
  std::vector<std::string> names;
  PriorSampler sampler;
  AnalyticSd analytic_sd;
};

struct SecondaryConfig {
  std::vector<SdSource> sources;  // one per parameter
  std::size_t mc_draws = 10000;
};

// Scale estimator from the first quartile of pairwise distances, scaled by
// 2.2219 for consistency at the normal. Needs at least two values.
double robust_scale(std::span<const double> x);

// Marginal SDs at lambda using the configured source per parameter.
// Throws std::domain_error naming the parameter when an SD is not finite
// and positive.
std::vector<double> marginal_sds(std::span<const double> lambda,
                                 const PriorModel& prior,
                                 const SecondaryConfig& cfg, Rng& rng);

// N(lambda) = -(1/Q) sum_q log SD[theta_q].
double secondary_objective(std::span<const double> lambda,
                           const PriorModel& prior, const SecondaryConfig& cfg,
                           Rng& rng);

// log_D + kappa N. Throws std::invalid_argument when kappa <= 0.
double loss(double log_D, double N, double kappa);

struct FrontierPoint {
  std::vector<double> lambda;
  double log_D;
  double N;
};

struct KappaSweep {
  std::vector<double> kappas;
  // selected[k] indexes the frontier point minimising the loss at kappas[k].
  std::vector<std::size_t> selected;
  // losses[k][i] for frontier point i.
  std::vector<std::vector<double>> losses;
};

// Ties go to the smaller log_D, then the lexicographically smaller lambda.
KappaSweep kappa_sweep(std::span<const FrontierPoint> front,
                       std::span<const double> kappas);

}  // namespace ptx

#endif  // PTX_OBJECTIVES_HPP_
