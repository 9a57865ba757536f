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

#ifndef PTX_PIPELINE_HPP_
#define PTX_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptx/bounds.hpp"
#include "ptx/discrepancy.hpp"
#include "ptx/gp.hpp"
#include "ptx/mspot.hpp"
#include "ptx/objectives.hpp"
#include "ptx/target.hpp"

namespace ptx {

// Everything the optimizer needs to know about a model.
struct Problem {
  std::string name;
  Bounds bounds;
  TargetSet targets;
  PredictiveSampler predictive;
  PriorModel prior;
  SecondaryConfig secondary;
};

struct OptimizerConfig {
  std::size_t n_crs2 = 2000;
  std::size_t n_batch = 3;
  std::size_t n_bo = 200;
  std::size_t n_design = 60;
  std::size_t n_pad = 10;
  std::size_t n_new = 1000;
  std::size_t n_eval = 1;
  // 0 selects crs2_population_size(dim).
  std::size_t crs2_population = 0;
  WeightScale weight_scale = WeightScale::kNegD;
  GpOptions gp;
};

struct PipelineConfig {
  DiscrepancyConfig discrepancy;
  OptimizerConfig optimizer;
  std::vector<double> kappas = {0.1, 0.2, 0.3, 0.5, 1.0, 2.0};
  std::uint64_t seed = 1;
};

struct EvaluationRecord {
  std::string stage;  // crs2, design, mspot or resample
  std::size_t batch;
  std::vector<double> lambda;
  double log_D;
  std::optional<double> N;
};

struct RunDiagnostics {
  std::size_t n_discrepancy_evals = 0;
  std::size_t n_secondary_evals = 0;
  std::size_t ad_fallbacks = 0;
  std::size_t gp_fallbacks = 0;
  std::size_t crs2_population = 0;
  std::vector<std::string> messages;
};

struct RunTimings {
  double stage1_seconds = 0.0;
  double stage2_seconds = 0.0;
  double total_seconds = 0.0;
};

struct RunResult {
  // Sorted by log_D, then N.
  std::vector<FrontierPoint> frontier;
  KappaSweep sweep;
  std::vector<EvaluationRecord> evaluations;
  RunDiagnostics diagnostics;
  RunTimings timings;
  std::uint64_t seed = 0;

  const FrontierPoint& optimum(std::size_t kappa_index) const {
    return frontier.at(sweep.selected.at(kappa_index));
  }
};

// Seed of the n-th stage-1 discrepancy evaluation.
std::uint64_t stage1_eval_seed(std::uint64_t seed, std::size_t n);

// CRS2 stage, then n_batch MSPOT batches with resampling in between, then
// the kappa sweep over the last frontier. Bit-reproducible for a fixed
// seed. Errors are rethrown as std::runtime_error naming the stage.
RunResult pbbo_run(const Problem& problem, const PipelineConfig& cfg);

}  // namespace ptx

#endif  // PTX_PIPELINE_HPP_
