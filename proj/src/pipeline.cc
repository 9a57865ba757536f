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

#include "ptx/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace ptx {
namespace {

enum Tag : std::uint64_t {
  kStage1 = 11,
  kStage1Eval = 12,
  kBatch = 13,
  kInitial = 14,
  kMspot = 15,
  kResample = 16,
  kSecondary = 17,
};

constexpr std::size_t kMaxMessages = 200;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::uint64_t stage1_eval_seed(std::uint64_t seed, std::size_t n) {
  return derive_seed(seed, {kStage1Eval, n});
}

RunResult pbbo_run(const Problem& problem, const PipelineConfig& cfg) {
  const auto t_start = std::chrono::steady_clock::now();
  const OptimizerConfig& oc = cfg.optimizer;
  const Bounds& bounds = problem.bounds;
  if (cfg.kappas.empty()) throw std::invalid_argument("pbbo: empty kappa grid");
  if (oc.n_batch < 1) throw std::invalid_argument("pbbo: n_batch must be >= 1");

  RunResult result;
  result.seed = cfg.seed;
  RunDiagnostics& diag = result.diagnostics;
  std::set<std::string> seen;
  auto note = [&](const std::string& m) {
    if (diag.messages.size() < kMaxMessages && seen.insert(m).second) {
      diag.messages.push_back(m);
    }
  };

  DiscrepancyEvaluator evaluator(problem.targets, problem.predictive, cfg.discrepancy);
  std::string stage = "crs2";
  std::size_t batch = 0;

  SeededObjective f_D = [&](std::span<const double> lambda, std::uint64_t seed) {
    if (!bounds.contains(lambda)) {
      throw std::logic_error("pbbo: evaluated lambda outside the bounds");
    }
    DiscrepancyEstimate est = evaluator.evaluate(lambda, seed);
    ++diag.n_discrepancy_evals;
    diag.ad_fallbacks += est.n_fallbacks;
    for (const auto& m : est.diagnostics) note(m);
    result.evaluations.push_back(
        {stage, batch, {lambda.begin(), lambda.end()}, est.log_D, std::nullopt});
    return est.log_D;
  };
  SeededObjective f_N = [&](std::span<const double> lambda, std::uint64_t seed) {
    if (!bounds.contains(lambda)) {
      throw std::logic_error("pbbo: evaluated lambda outside the bounds");
    }
    Rng rng = Rng(seed).split(kSecondary);
    double n = secondary_objective(lambda, problem.prior, problem.secondary, rng);
    ++diag.n_secondary_evals;
    for (auto it = result.evaluations.rbegin(); it != result.evaluations.rend(); ++it) {
      if (!it->N && same_lambda(it->lambda, lambda)) {
        it->N = n;
        break;
      }
    }
    return n;
  };

  Rng base(cfg.seed);
  std::vector<TracePoint> trace;
  try {
    std::size_t counter = 0;
    Objective f1 = [&](std::span<const double> lambda) {
      return f_D(lambda, stage1_eval_seed(cfg.seed, counter++));
    };
    Rng rng = base.split(kStage1);
    diag.crs2_population =
        oc.crs2_population ? oc.crs2_population : crs2_population_size(bounds.dim());
    trace = crs2_minimize(f1, bounds, oc.n_crs2, rng, oc.crs2_population);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage 1 (crs2): ") + e.what());
  }
  result.timings.stage1_seconds = seconds_since(t_start);

  const auto t_stage2 = std::chrono::steady_clock::now();
  MspotConfig mc{oc.n_bo, oc.n_new, oc.n_eval, oc.gp};
  std::optional<MspotResult> last;
  for (batch = 0; batch < oc.n_batch; ++batch) {
    try {
      Rng brng = base.split({kBatch, batch});
      std::optional<Design> design;
      if (batch == 0) {
        stage = "design";
        Rng r = brng.split(kInitial);
        design = build_initial_design(trace, oc.n_design, oc.n_pad, bounds, f_D, r,
                                      oc.weight_scale);
      } else {
        stage = "resample";
        Rng r = brng.split(kResample);
        design = resample_batch(last->front, last->design, oc.n_design, oc.n_pad,
                                bounds, f_D, f_N, r, oc.weight_scale);
      }
      stage = "mspot";
      Rng r = brng.split(kMspot);
      last = mspot_batch(f_D, f_N, std::move(*design), mc, bounds, r);
      diag.gp_fallbacks += last->gp_fallbacks;
      for (const auto& w : last->warnings) note("batch " + std::to_string(batch) + ": " + w);
    } catch (const std::exception& e) {
      throw std::runtime_error("batch " + std::to_string(batch) + " (" + stage +
                               "): " + e.what());
    }
  }
  result.timings.stage2_seconds = seconds_since(t_stage2);

  result.frontier = last->front.points();
  std::sort(result.frontier.begin(), result.frontier.end(),
            [](const FrontierPoint& a, const FrontierPoint& b) {
              if (a.log_D != b.log_D) return a.log_D < b.log_D;
              if (a.N != b.N) return a.N < b.N;
              return a.lambda < b.lambda;
            });
  result.sweep = kappa_sweep(result.frontier, cfg.kappas);
  result.timings.total_seconds = seconds_since(t_start);
  return result;
}

}  // namespace ptx
