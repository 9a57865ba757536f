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

#ifndef PTX_MODELS_PREECE_BAINES_HPP_
#define PTX_MODELS_PREECE_BAINES_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ptx/bounds.hpp"
#include "ptx/pipeline.hpp"
#include "ptx/target.hpp"

namespace ptx {

// Preece-Baines growth curve with lognormal priors on
// theta = (h0, delta_h, s0, delta_s, gamma).
//
// lambda = (mean_q, sd_q) for q = 1..5, interleaved, on the natural scale
// of theta_q. Noise sigma_y ~ LogNormal(0, 0.2^2) is fixed.
using PbTheta = std::array<double, 5>;

// h1 - 2 (h1 - h0) / (exp(s0 (t - gamma)) + exp(s1 (t - gamma))) with
// h1 = h0 + delta_h and s1 = s0 + delta_s. Exactly h0 at t = gamma.
double pb_height(double t, const PbTheta& theta);

inline constexpr double kPbEpsilon = 1e-6;
inline constexpr double kPbMinAge = 2.0;
inline constexpr double kPbMaxAge = 18.0;
inline constexpr double kPbNoiseSdlog = 0.2;

Bounds pb_bounds();

// Log-scale (meanlog, sdlog) matching a natural-scale mean and SD.
std::array<double, 2> pb_lognormal_params(double mean, double sd);

PbTheta pb_draw_theta(std::span<const double> lambda, Rng& rng);

// Ages of the covariate-specific targets.
std::vector<double> pb_target_ages();
TargetSet pb_covariate_targets();
TargetSpec pb_population_target();

// Heights at ages[row]; with no ages every draw takes age ~ U(2, 18).
PredictiveSampler pb_predictive(std::vector<double> ages);
PriorModel pb_prior_model();

enum class PbMode { kCovariateSpecific, kCovariateIndependent };
Problem make_pb_problem(PbMode mode);

}  // namespace ptx

#endif  // PTX_MODELS_PREECE_BAINES_HPP_
