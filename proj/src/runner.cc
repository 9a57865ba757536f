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

#include "ptx/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <thread>

#include "ptx/artifacts.hpp"

namespace ptx {

namespace fs = std::filesystem;

namespace {
constexpr std::uint64_t kOptimumSamples = 0x0b7;
}  // namespace

std::string replicate_dir_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "rep_%03zu", i);
  return buf;
}

ReplicateOutcome run_replicate(const RunConfig& cfg, std::size_t index, const fs::path& dir) {
  ReplicateOutcome out;
  out.index = index;
  out.seed = replicate_seed(cfg.pipeline.seed, index);
  out.dir = dir;
  try {
    Problem problem = build_problem(cfg);
    PipelineConfig pc = cfg.pipeline;
    pc.seed = out.seed;
    RunResult r = pbbo_run(problem, pc);

    fs::create_directories(dir);
    const auto& names = problem.bounds.names();
    write_frontier_csv(dir / "frontier.csv", names, r.frontier);
    write_sweep_csv(dir / "sweep.csv", names, r.frontier, r.sweep);
    write_evaluations_csv(dir / "evaluations.csv", names, r.evaluations);

    const double kp = cfg.primary_kappa();
    std::size_t k = 0;
    while (k + 1 < r.sweep.kappas.size() && r.sweep.kappas[k] != kp) ++k;
    Rng rng(derive_seed(out.seed, {kOptimumSamples}));
    Eigen::MatrixXd draws =
        problem.prior.sampler(r.optimum(k).lambda, cfg.optimum_samples, rng);
    write_samples_csv(dir / "optimum_prior_samples.csv", problem.prior.names, draws);

    write_json(dir / "run.json",
               run_summary_json(problem, r, config_to_json(cfg), index, r.sweep.kappas[k]));
    write_json(dir / "timings.json", timings_json(r.timings));
    out.result = std::move(r);
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<ReplicateOutcome> run_replicates(const RunConfig& cfg, std::ostream* log) {
  const std::size_t n = cfg.replicates;
  std::vector<ReplicateOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      fs::path dir = fs::path(cfg.out_dir) / replicate_dir_name(i);
      outcomes[i] = run_replicate(cfg, i, dir);
      if (log) {
        std::lock_guard<std::mutex> lock(log_mu);
        if (outcomes[i].ok) {
          *log << "replicate " << i << ": ok (" << outcomes[i].result->frontier.size()
               << " frontier points) -> " << dir.string() << '\n';
        } else {
          *log << "replicate " << i << ": FAILED: " << outcomes[i].error << '\n';
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

}  // namespace ptx
