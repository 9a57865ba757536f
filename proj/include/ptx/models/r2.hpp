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

#ifndef PTX_MODELS_R2_HPP_
#define PTX_MODELS_R2_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ptx/bounds.hpp"
#include "ptx/pipeline.hpp"
#include "ptx/target.hpp"

namespace ptx {

// Priors on linear regression coefficients, judged through the implied R^2.
//
//   gaussian:          lambda = (gamma, a1, b1)       theta = (beta, sigma2)
//   dirichlet_laplace: lambda = (alpha, a1, b1)       theta = (beta, sigma2, phi, tau)
//   horseshoe:         lambda = (p0, nu, s2, a1, b1)  theta = (beta, sigma2, c2, omega, delta)
//
// sigma2 ~ InvGamma(a1, b1) throughout.
enum class R2Prior { kGaussian, kDirichletLaplace, kHorseshoe };

std::string_view r2_prior_name(R2Prior kind);
R2Prior r2_prior_from_name(std::string_view name);

// n x p standard normal entries with centred columns.
Eigen::MatrixXd simulate_r2_design(std::size_t n, std::size_t p, std::uint64_t seed);

Bounds r2_bounds(R2Prior kind, std::size_t n, std::size_t p);

struct R2Draws {
  Eigen::MatrixXd beta;    // p x S
  Eigen::VectorXd sigma2;  // S
  Eigen::MatrixXd phi;     // dirichlet_laplace: p x S
  Eigen::VectorXd tau;     // dirichlet_laplace
  Eigen::VectorXd c2;      // horseshoe
  Eigen::VectorXd omega;   // horseshoe
  Eigen::MatrixXd delta;   // horseshoe: p x S
};

R2Draws r2_draw(R2Prior kind, std::span<const double> lambda, std::size_t n,
                std::size_t p, std::size_t count, Rng& rng);

// q / (q + sigma2) with q = |X beta|^2 / n, per column of beta.
// Throws std::overflow_error when q is not finite.
std::vector<double> r2_values(const Eigen::MatrixXd& x, const Eigen::MatrixXd& beta,
                              const Eigen::VectorXd& sigma2);
double r2_value(double q, double sigma2);

PredictiveSampler r2_predictive(R2Prior kind, const Eigen::MatrixXd& x);
PriorModel r2_prior_model(R2Prior kind, std::size_t n, std::size_t p);
SecondaryConfig r2_secondary(R2Prior kind, std::size_t p);

// Exponentially spaced shapes between 1/3 and 3.
std::vector<double> r2_target_shapes();
// Beta(s1, s2) for every (s1, s2) pair of shapes, s1 varying slowest.
std::vector<TargetSpec> r2_target_grid();
TargetSpec r2_beta_target(double s1, double s2);
// Beta fitted by moments to `count` draws of the model's own R^2 at lambda.
TargetSpec r2_moment_target(R2Prior kind, std::span<const double> lambda,
                            const Eigen::MatrixXd& x, std::size_t count,
                            std::uint64_t seed);

Problem make_r2_problem(R2Prior kind, const Eigen::MatrixXd& x, TargetSpec target);

}  // namespace ptx

#endif  // PTX_MODELS_R2_HPP_
