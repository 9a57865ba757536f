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

#ifndef PTX_RUNNER_HPP_
#define PTX_RUNNER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptx/config.hpp"
#include "ptx/pipeline.hpp"

namespace ptx {

struct ReplicateOutcome {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::filesystem::path dir;
  bool ok = false;
  std::string error;
  std::optional<RunResult> result;
};

// rep_000, rep_001, ...
std::string replicate_dir_name(std::size_t i);

// Runs one replicate and writes frontier.csv, sweep.csv, run.json,
// optimum_prior_samples.csv, evaluations.csv and timings.json into `dir`.
ReplicateOutcome run_replicate(const RunConfig& cfg, std::size_t index,
                               const std::filesystem::path& dir);

// All replicates on a pool of cfg.jobs workers. Results do not depend on
// the number of workers. Progress lines go to `log` when given.
std::vector<ReplicateOutcome> run_replicates(const RunConfig& cfg, std::ostream* log);

}  // namespace ptx

#endif  // PTX_RUNNER_HPP_
