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

#ifndef PTX_CONFIG_HPP_
#define PTX_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptx/pipeline.hpp"

namespace ptx {

// Full run configuration. Every field maps to a dotted JSON key; see
// docs/config.md for the schema.
struct RunConfig {
  // problem.*
  std::string problem = "r2";
  std::uint64_t data_seed = 20240101;
  std::string r2_prior = "gaussian";
  std::size_t r2_n = 50;
  std::size_t r2_p = 80;
  std::vector<double> r2_target_shapes = {3.0, 3.0};
  std::vector<double> r2_roundtrip_lambda;  // empty: use the Beta shapes
  std::size_t r2_roundtrip_draws = 100000;
  std::size_t survival_n = 50;
  int survival_b = 4;
  std::string pb_mode = "covariate";

  PipelineConfig pipeline;
  std::size_t mc_draws = 10000;
  std::optional<double> kappa_primary;

  // run.*
  std::size_t replicates = 1;
  std::string out_dir = "ptx_out";
  std::size_t jobs = 1;
  std::size_t optimum_samples = 10000;

  double primary_kappa() const {
    return kappa_primary ? *kappa_primary : pipeline.kappas.front();
  }
};

// Defaults as a JSON document; also the set of accepted keys.
nlohmann::json default_config_json();

// Applies `key=value` with a dotted key; the value is parsed as JSON and
// falls back to a plain string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Every schema violation in `doc`, one message per offending key.
std::vector<std::string> validate_config(const nlohmann::json& doc);

// Merges `doc` over the defaults. Throws ConfigError listing violations.
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const RunConfig& cfg);

struct ConfigError : std::runtime_error {
  ConfigError(std::vector<std::string> v);
  std::vector<std::string> violations;
};

// Reads a JSON file; throws ConfigError on I/O or parse failure.
nlohmann::json load_config_file(const std::string& path);

Problem build_problem(const RunConfig& cfg);

// Seed of replicate i.
std::uint64_t replicate_seed(std::uint64_t seed, std::size_t replicate);

}  // namespace ptx

#endif  // PTX_CONFIG_HPP_
