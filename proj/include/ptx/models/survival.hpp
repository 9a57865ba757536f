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

#ifndef PTX_MODELS_SURVIVAL_HPP_
#define PTX_MODELS_SURVIVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ptx/bounds.hpp"
#include "ptx/pipeline.hpp"
#include "ptx/target.hpp"

namespace ptx {

// Cure-fraction Weibull regression with B correlated covariates.
//
// lambda = (alpha, beta, mu_0, sigma_0, s_beta, omega[B(B-1)/2], eta[B],
//           a_pi, b_pi)
// theta  = (pi, gamma, beta_0, beta_1..beta_B)
struct SurvivalData {
  Eigen::VectorXd censoring;    // C_n
  Eigen::MatrixXd covariates;   // N x B
  Eigen::MatrixXd correlation;  // B x B
  std::size_t size() const { return static_cast<std::size_t>(censoring.size()); }
  int dim() const { return static_cast<int>(covariates.cols()); }
};

// C_n ~ 20 + Exp(1), Q ~ LKJ(5), x_n ~ MVN(0, Q).
SurvivalData simulate_survival_data(std::size_t n, int b, std::uint64_t seed);

inline constexpr double kSurvivalCureMass = 0.05;
inline constexpr double kSurvivalEpsilon = 1e-4;

// 0.95 * LogNormal(log 3, (2/3)^2) truncated to (0, C] plus 0.05 at C.
TargetSpec survival_target(double censoring_time);

std::size_t survival_lambda_dim(int b);
Bounds survival_bounds(int b);

struct SurvivalTheta {
  double pi;
  double gamma;
  double beta0;
  Eigen::VectorXd beta;
};

// Draws from the hyperprior-implied priors at lambda, shared across rows.
class SurvivalPrior {
 public:
  SurvivalPrior(std::span<const double> lambda, int b);
  SurvivalTheta draw(Rng& rng) const;
  // Marginal SDs of theta in order.
  std::vector<double> analytic_sd() const;
  int dim() const { return b_; }

 private:
  int b_;
  double alpha_, beta_, mu0_, sigma0_, a_pi_, b_pi_;
  MvSkewNormal skew_;
};

// One observable given theta: C when cured or censored, else the Weibull time.
double survival_observable(const SurvivalTheta& theta, double censoring_time,
                           std::span<const double> x, Rng& rng);

PredictiveSampler survival_predictive(const SurvivalData& data);
PriorModel survival_prior_model(int b);

// One target per individual, streams keyed by n.
Problem make_survival_problem(const SurvivalData& data);

}  // namespace ptx

#endif  // PTX_MODELS_SURVIVAL_HPP_
