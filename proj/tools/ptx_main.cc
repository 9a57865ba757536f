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

// ptx: translate elicited prior predictive targets into prior hyperparameters.
//
//   ptx run --config cfg.json [--seed N] [--replicates N] [--out DIR]
//           [--jobs N] [--set key=value ...]
//   ptx sweep-kappa --frontier frontier.csv --kappas 0.1,0.5,1 [--out sweep.csv]
//   ptx validate --config cfg.json [--set key=value ...]
//
// Exit status: 0 ok, 1 run failure, 2 config or usage failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptx/artifacts.hpp"
#include "ptx/config.hpp"
#include "ptx/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRunFailure = 1;
constexpr int kConfigFailure = 2;

nlohmann::json assemble(const std::string& path, const std::vector<std::string>& sets) {
  nlohmann::json doc = path.empty() ? nlohmann::json::object() : ptx::load_config_file(path);
  for (const auto& s : sets) ptx::apply_override(doc, s);
  return doc;
}

std::vector<double> parse_kappas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size() || !(v > 0.0)) throw std::invalid_argument(cell);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prior hyperparameters from prior predictive targets"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replicates, jobs;
  std::optional<std::string> out_dir;

  auto* run = app.add_subcommand("run", "Run the optimizer and write artifacts");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--seed", seed, "Base seed");
  run->add_option("--replicates", replicates, "Number of replicates");
  run->add_option("--out", out_dir, "Output directory (default: $PTX_OUT_DIR or run.out)");
  run->add_option("--jobs", jobs, "Replicates run in parallel");
  run->add_option("--set", sets, "Override a config key, e.g. --set optimizer.n_bo=50");

  std::string frontier_path, kappa_text, sweep_out = "sweep.csv";
  auto* sweep = app.add_subcommand("sweep-kappa", "Re-select optima from a frontier file");
  sweep->add_option("--frontier", frontier_path, "frontier.csv from a run")->required();
  sweep->add_option("--kappas", kappa_text, "Comma-separated kappa grid")->required();
  sweep->add_option("--out", sweep_out, "Output CSV");

  auto* validate = app.add_subcommand("validate", "Check a config against the schema");
  validate->add_option("--config", config_path, "JSON config file");
  validate->add_option("--set", sets, "Override a config key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigFailure;
  }

  if (*validate) {
    try {
      std::vector<std::string> v = ptx::validate_config(assemble(config_path, sets));
      for (const auto& m : v) std::cout << m << '\n';
      if (v.empty()) std::cout << "ok\n";
      return v.empty() ? kOk : kConfigFailure;
    } catch (const ptx::ConfigError& e) {
      for (const auto& m : e.violations) std::cout << m << '\n';
      return kConfigFailure;
    }
  }

  if (*sweep) {
    std::vector<double> kappas;
    try {
      kappas = parse_kappas(kappa_text);
    } catch (const std::exception&) {
      std::cerr << "--kappas must be a comma-separated list of positive numbers\n";
      return kConfigFailure;
    }
    try {
      ptx::FrontierFile f = ptx::read_frontier_csv(frontier_path);
      ptx::KappaSweep s = ptx::kappa_sweep(f.points, kappas);
      ptx::write_sweep_csv(sweep_out, f.names, f.points, s);
      std::cout << "wrote " << sweep_out << '\n';
      return kOk;
    } catch (const std::exception& e) {
      std::cerr << "sweep-kappa: " << e.what() << '\n';
      return kConfigFailure;
    }
  }

  ptx::RunConfig cfg;
  try {
    nlohmann::json doc = assemble(config_path, sets);
    const bool has_out = doc.contains("run") && doc["run"].is_object() &&
                         doc["run"].contains("out");
    cfg = ptx::config_from_json(doc);
    if (const char* env = std::getenv("PTX_OUT_DIR"); env && *env && !has_out) {
      cfg.out_dir = env;
    }
  } catch (const ptx::ConfigError& e) {
    for (const auto& m : e.violations) std::cerr << "config: " << m << '\n';
    return kConfigFailure;
  }
  if (seed) cfg.pipeline.seed = *seed;
  if (out_dir) cfg.out_dir = *out_dir;
  if (replicates) cfg.replicates = *replicates;
  if (jobs) cfg.jobs = *jobs;
  if (cfg.replicates < 1 || cfg.jobs < 1) {
    std::cerr << "config: --replicates and --jobs must be >= 1\n";
    return kConfigFailure;
  }

  std::vector<ptx::ReplicateOutcome> outcomes = ptx::run_replicates(cfg, &std::cerr);
  int failed = 0;
  for (const auto& o : outcomes) failed += o.ok ? 0 : 1;
  if (failed) {
    std::cerr << failed << " of " << outcomes.size() << " replicates failed\n";
    return kRunFailure;
  }
  return kOk;
}
