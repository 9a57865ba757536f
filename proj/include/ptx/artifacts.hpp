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

#ifndef PTX_ARTIFACTS_HPP_
#define PTX_ARTIFACTS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ptx/objectives.hpp"
#include "ptx/pipeline.hpp"

namespace ptx {

// Shortest round-trippable text for a double (printf %.17g).
std::string format_double(double v);

// index,<lambda names>,log_D,N
void write_frontier_csv(const std::filesystem::path& path,
                        const std::vector<std::string>& names,
                        const std::vector<FrontierPoint>& frontier);

struct FrontierFile {
  std::vector<std::string> names;
  std::vector<FrontierPoint> points;
};
// Throws std::runtime_error naming the line on malformed input.
FrontierFile read_frontier_csv(const std::filesystem::path& path);

// kappa,frontier_index,<lambda names>,log_D,N,loss,selected with one row per
// frontier point per kappa; selected = 1 marks the minimum-loss point.
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<std::string>& names,
                     const std::vector<FrontierPoint>& frontier,
                     const KappaSweep& sweep);

// stage,batch,<lambda names>,log_D,N
void write_evaluations_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& names,
                           const std::vector<EvaluationRecord>& evals);

// draw,<theta names>
void write_samples_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& names,
                       const Eigen::MatrixXd& draws);

nlohmann::json run_summary_json(const Problem& problem, const RunResult& result,
                                const nlohmann::json& config, std::size_t replicate,
                                double primary_kappa);
nlohmann::json timings_json(const RunTimings& t);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace ptx

#endif  // PTX_ARTIFACTS_HPP_
