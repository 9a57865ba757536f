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

#ifndef PTX_IMPORTANCE_HPP_
#define PTX_IMPORTANCE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptx/distributions.hpp"
#include "ptx/rng.hpp"
#include "ptx/target.hpp"

namespace ptx {

inline constexpr double kDefaultWidening = 1.05;

struct Moments {
  double mean = 0.0;
  // Unbiased sample variance.
  double variance = 0.0;
};

Moments sample_moments(std::span<const double> y);

// Two-component moment-matched mixture covering the predictive and target
// samples: Student-t5 on the real line, Gamma on the half line, and Beta
// on (0, a] with a point mass at a.
struct ImportanceProposal {
  MixtureSpec mixture;
  Support support;
  double widening = kDefaultWidening;
  Moments predictive;
  Moments target;
  std::vector<std::string> diagnostics;
};

ImportanceProposal select_proposal(const Support& support,
                                   std::span<const double> samples_p,
                                   std::span<const double> samples_t,
                                   double widening = kDefaultWidening);

// Uniform density on (0, a]; bounded supports only.
ImportanceProposal uniform_proposal(const Support& support);

// Log-density of the continuous part, or the atom log-mass at the atom.
double proposal_log_density(const ImportanceProposal& q, double y);
std::vector<double> sample_proposal(const ImportanceProposal& q, std::size_t n,
                                    Rng& rng);

}  // namespace ptx

#endif  // PTX_IMPORTANCE_HPP_
