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

#ifndef PTX_DISCREPANCY_HPP_
#define PTX_DISCREPANCY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ptx/importance.hpp"
#include "ptx/rng.hpp"
#include "ptx/target.hpp"

namespace ptx {

enum class DiscrepancyKind { kCvM, kAD };

// Moment-matched mixture per support, or a fixed uniform density on
// bounded supports.
enum class ProposalKind { kMomentMatched, kUniform };

// Value returned for an exactly zero CDF difference and for an estimate
// whose point terms are all -inf.
inline constexpr double kLogFloor = -745.0;

// 2 log|p_hat - exp(lcdf_t)|, evaluated without forming exp(lcdf_t) when
// it would underflow.
double log_cvm_term(double p_hat, double lcdf_t);

struct AdTerm {
  double value;
  bool fallback;
};

// log_cvm_term - lcdf_t - log1mexp(-lcdf_t). Falls back to the CvM term
// when the weight is not finite (T = 0 or T = 1).
AdTerm log_ad_term(double p_hat, double lcdf_t);

// Draws n prior predictive samples for covariate row `row` at `lambda`.
using PredictiveSampler = std::function<std::vector<double>(
    std::span<const double> lambda, std::size_t row, std::size_t n, Rng& rng)>;

struct DiscrepancyConfig {
  std::size_t n_predictive = 10000;  // S_r
  std::size_t n_importance = 5000;   // I_r
  DiscrepancyKind kind = DiscrepancyKind::kCvM;
  double widening = kDefaultWidening;
  ProposalKind proposal = ProposalKind::kMomentMatched;
  // Reuse one set of target samples per row across evaluations.
  bool cache_target_samples = false;
  std::uint64_t target_cache_seed = 0;
  // Worker threads over covariate rows; 1 runs inline.
  int row_threads = 1;
};

struct DiscrepancyEstimate {
  double log_D = kLogFloor;
  std::vector<double> per_row;
  std::size_t n_fallbacks = 0;
  // Kish effective sample size of the importance terms, per row.
  std::vector<double> ess;
  std::vector<std::string> diagnostics;
};

class DiscrepancyEvaluator {
 public:
  DiscrepancyEvaluator(const TargetSet& targets, PredictiveSampler sampler,
                       DiscrepancyConfig cfg);

  // Deterministic in (lambda, seed).
  DiscrepancyEstimate evaluate(std::span<const double> lambda,
                               std::uint64_t seed) const;

  const DiscrepancyConfig& config() const { return cfg_; }
  const TargetSet& targets() const { return targets_; }

 private:
  struct RowResult {
    double log_mean;
    std::size_t fallbacks;
    double ess;
    std::vector<std::string> diagnostics;
  };
  RowResult evaluate_row(std::span<const double> lambda, std::size_t r,
                         const Rng& rng) const;

  TargetSet targets_;
  PredictiveSampler sampler_;
  DiscrepancyConfig cfg_;
  std::vector<std::vector<double>> cached_targets_;
};

DiscrepancyEstimate log_total_discrepancy(std::span<const double> lambda,
                                          const TargetSet& targets,
                                          const PredictiveSampler& sampler,
                                          const DiscrepancyConfig& cfg,
                                          std::uint64_t seed);

}  // namespace ptx

#endif  // PTX_DISCREPANCY_HPP_
