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

#include "ptx/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ptx/crs2.hpp"
#include "ptx/models/preece_baines.hpp"
#include "ptx/models/r2.hpp"
#include "ptx/models/survival.hpp"

namespace ptx {

using nlohmann::json;

namespace {

// Like merge_patch, but null leaves are kept rather than deleting the key.
void overlay(json& base, const json& patch) {
  for (auto it = patch.begin(); it != patch.end(); ++it) {
    if (it.value().is_object() && base.contains(it.key()) && base[it.key()].is_object()) {
      overlay(base[it.key()], it.value());
    } else {
      base[it.key()] = it.value();
    }
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

const std::vector<std::string> kProblems = {"survival", "r2", "preece_baines"};
const std::vector<std::string> kR2Priors = {"gaussian", "dirichlet_laplace", "horseshoe"};
const std::vector<std::string> kPbModes = {"covariate", "population"};
const std::vector<std::string> kKinds = {"cvm", "ad"};
const std::vector<std::string> kProposals = {"moment_matched", "uniform"};
const std::vector<std::string> kWeightScales = {"neg_D", "neg_log_D"};

bool is_number(const json& j) { return j.is_number(); }

// Same-shape check against the defaults; reports unknown keys and type
// mismatches with their dotted path.
void check_shape(const json& doc, const json& ref, const std::string& prefix,
                 std::vector<std::string>& out) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (!ref.contains(it.key())) {
      out.push_back("unknown key '" + key + "'");
      continue;
    }
    const json& r = ref.at(it.key());
    const json& v = it.value();
    if (r.is_object()) {
      if (!v.is_object()) {
        out.push_back("'" + key + "' must be an object");
      } else {
        check_shape(v, r, key, out);
      }
    } else if (r.is_null()) {
      if (!v.is_null() && !is_number(v)) out.push_back("'" + key + "' must be a number or null");
    } else if (r.is_number_unsigned() || r.is_number_integer()) {
      if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                     v.get<std::int64_t>() < 0)) {
        out.push_back("'" + key + "' must be a non-negative integer");
      }
    } else if (r.is_number()) {
      if (!is_number(v)) out.push_back("'" + key + "' must be a number");
    } else if (r.is_string()) {
      if (!v.is_string()) out.push_back("'" + key + "' must be a string");
    } else if (r.is_boolean()) {
      if (!v.is_boolean()) out.push_back("'" + key + "' must be a boolean");
    } else if (r.is_array()) {
      if (!v.is_array() || !std::all_of(v.begin(), v.end(), is_number)) {
        out.push_back("'" + key + "' must be an array of numbers");
      }
    }
  }
}

json pointer_get(const json& doc, const std::string& path) {
  std::string p = "/" + path;
  std::replace(p.begin(), p.end(), '.', '/');
  return doc.at(json::json_pointer(p));
}

void check_choice(const json& doc, const std::string& path,
                  const std::vector<std::string>& allowed, std::vector<std::string>& out) {
  const std::string v = pointer_get(doc, path).get<std::string>();
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
    out.push_back("'" + path + "' is '" + v + "'; allowed values: " + join(allowed));
  }
}

void check_min(const json& doc, const std::string& path, double min,
               std::vector<std::string>& out) {
  double v = pointer_get(doc, path).get<double>();
  if (!(v >= min)) {
    std::ostringstream os;
    os << "'" << path << "' must be >= " << min;
    out.push_back(os.str());
  }
}

std::size_t lambda_dim(const json& m) {
  const std::string name = pointer_get(m, "problem.name").get<std::string>();
  if (name == "survival") {
    return survival_lambda_dim(pointer_get(m, "problem.survival.b").get<int>());
  }
  if (name == "preece_baines") return 10;
  return pointer_get(m, "problem.r2.prior").get<std::string>() == "horseshoe" ? 5 : 3;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> v)
    : std::runtime_error("invalid config: " + join(v)), violations(std::move(v)) {}

json config_to_json(const RunConfig& c) {
  const PipelineConfig& p = c.pipeline;
  const OptimizerConfig& o = p.optimizer;
  json j;
  j["problem"] = {
      {"name", c.problem},
      {"data_seed", c.data_seed},
      {"r2",
       {{"prior", c.r2_prior},
        {"n", c.r2_n},
        {"p", c.r2_p},
        {"target_shapes", c.r2_target_shapes},
        {"roundtrip_lambda", c.r2_roundtrip_lambda},
        {"roundtrip_draws", c.r2_roundtrip_draws}}},
      {"survival", {{"n", c.survival_n}, {"b", c.survival_b}}},
      {"preece_baines", {{"mode", c.pb_mode}}},
  };
  j["discrepancy"] = {
      {"kind", p.discrepancy.kind == DiscrepancyKind::kAD ? "ad" : "cvm"},
      {"n_predictive", p.discrepancy.n_predictive},
      {"n_importance", p.discrepancy.n_importance},
      {"cache_target_samples", p.discrepancy.cache_target_samples},
      {"row_threads", p.discrepancy.row_threads},
  };
  j["importance"] = {
      {"widening", p.discrepancy.widening},
      {"proposal",
       p.discrepancy.proposal == ProposalKind::kUniform ? "uniform" : "moment_matched"},
  };
  j["optimizer"] = {
      {"n_crs2", o.n_crs2},   {"n_batch", o.n_batch}, {"n_bo", o.n_bo},
      {"n_design", o.n_design}, {"n_pad", o.n_pad},   {"n_new", o.n_new},
      {"n_eval", o.n_eval},   {"crs2_population", o.crs2_population},
  };
  j["design"] = {
      {"weight_scale", o.weight_scale == WeightScale::kNegLogD ? "neg_log_D" : "neg_D"}};
  j["gp"] = {{"restarts", o.gp.restarts}, {"max_iter", o.gp.max_iter}};
  j["secondary"] = {{"mc_draws", c.mc_draws}};
  j["kappa"] = {{"grid", p.kappas},
                {"primary", c.kappa_primary ? json(*c.kappa_primary) : json(nullptr)}};
  j["run"] = {
      {"seed", p.seed},       {"replicates", c.replicates},
      {"out", c.out_dir},     {"jobs", c.jobs},
      {"optimum_samples", c.optimum_samples},
  };
  return j;
}

json default_config_json() { return config_to_json(RunConfig{}); }

void apply_override(json& doc, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError({"override '" + assignment + "' is not key=value"});
  }
  std::string key = assignment.substr(0, eq);
  std::string raw = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  std::string p = "/" + key;
  std::replace(p.begin(), p.end(), '.', '/');
  doc[json::json_pointer(p)] = value;
}

std::vector<std::string> validate_config(const json& doc) {
  std::vector<std::string> out;
  if (!doc.is_object()) return {"config root must be an object"};
  const json defaults = default_config_json();
  check_shape(doc, defaults, "", out);
  if (!out.empty()) return out;
  json m = defaults;
  overlay(m, doc);

  check_choice(m, "problem.name", kProblems, out);
  check_choice(m, "problem.r2.prior", kR2Priors, out);
  check_choice(m, "problem.preece_baines.mode", kPbModes, out);
  check_choice(m, "discrepancy.kind", kKinds, out);
  check_choice(m, "importance.proposal", kProposals, out);
  check_choice(m, "design.weight_scale", kWeightScales, out);
  if (!out.empty()) return out;

  for (const char* k :
       {"discrepancy.n_predictive", "discrepancy.n_importance", "discrepancy.row_threads",
        "optimizer.n_crs2", "optimizer.n_batch", "optimizer.n_bo", "optimizer.n_design",
        "optimizer.n_new", "optimizer.n_eval", "gp.restarts", "gp.max_iter",
        "run.replicates", "run.jobs", "run.optimum_samples", "problem.survival.n",
        "problem.survival.b", "problem.r2.p"}) {
    check_min(m, k, 1, out);
  }
  check_min(m, "problem.r2.n", 2, out);
  check_min(m, "problem.r2.roundtrip_draws", 2, out);
  check_min(m, "secondary.mc_draws", 100, out);
  check_min(m, "importance.widening", 1.0, out);

  const json& shapes = pointer_get(m, "problem.r2.target_shapes");
  if (shapes.size() != 2 || !(shapes[0].get<double>() > 0) || !(shapes[1].get<double>() > 0)) {
    out.push_back("'problem.r2.target_shapes' must hold two positive numbers");
  }
  const std::string name = pointer_get(m, "problem.name").get<std::string>();
  const std::string prior = pointer_get(m, "problem.r2.prior").get<std::string>();
  if (name == "r2" && prior == "horseshoe" && pointer_get(m, "problem.r2.p").get<double>() < 3) {
    out.push_back("'problem.r2.p' must be >= 3 for the horseshoe prior");
  }
  const json& rt = pointer_get(m, "problem.r2.roundtrip_lambda");
  if (!rt.empty() && rt.size() != (prior == "horseshoe" ? 5u : 3u)) {
    out.push_back("'problem.r2.roundtrip_lambda' must be empty or have " +
                  std::to_string(prior == "horseshoe" ? 5 : 3) + " entries");
  }
  if (name == "preece_baines" &&
      pointer_get(m, "importance.proposal").get<std::string>() == "uniform") {
    out.push_back("'importance.proposal' = uniform needs a bounded support; preece_baines "
                  "targets are unbounded");
  }

  const json& grid = pointer_get(m, "kappa.grid");
  if (grid.empty()) out.push_back("'kappa.grid' must not be empty");
  for (const auto& k : grid) {
    if (!(k.get<double>() > 0.0)) {
      out.push_back("'kappa.grid' entries must be > 0");
      break;
    }
  }
  const json& primary = pointer_get(m, "kappa.primary");
  if (!primary.is_null()) {
    double v = primary.get<double>();
    if (std::none_of(grid.begin(), grid.end(), [v](const json& k) { return k == v; })) {
      out.push_back("'kappa.primary' must be one of the 'kappa.grid' values");
    }
  }

  const std::size_t pop = pointer_get(m, "optimizer.crs2_population").get<std::size_t>();
  if (out.empty()) {
    const std::size_t dim = lambda_dim(m);
    const std::size_t eff = pop ? pop : crs2_population_size(dim);
    if (pop != 0 && pop < dim + 1) {
      out.push_back("'optimizer.crs2_population' must be 0 (automatic) or >= " +
                    std::to_string(dim + 1));
    } else if (pointer_get(m, "optimizer.n_crs2").get<std::size_t>() < eff) {
      out.push_back("'optimizer.n_crs2' must be >= the CRS2 population (" +
                    std::to_string(eff) + ")");
    }
  }
  return out;
}

RunConfig config_from_json(const json& doc) {
  std::vector<std::string> v = validate_config(doc);
  if (!v.empty()) throw ConfigError(std::move(v));
  json m = default_config_json();
  overlay(m, doc);
  auto g = [&](const char* path) { return pointer_get(m, path); };

  RunConfig c;
  c.problem = g("problem.name").get<std::string>();
  c.data_seed = g("problem.data_seed").get<std::uint64_t>();
  c.r2_prior = g("problem.r2.prior").get<std::string>();
  c.r2_n = g("problem.r2.n").get<std::size_t>();
  c.r2_p = g("problem.r2.p").get<std::size_t>();
  c.r2_target_shapes = g("problem.r2.target_shapes").get<std::vector<double>>();
  c.r2_roundtrip_lambda = g("problem.r2.roundtrip_lambda").get<std::vector<double>>();
  c.r2_roundtrip_draws = g("problem.r2.roundtrip_draws").get<std::size_t>();
  c.survival_n = g("problem.survival.n").get<std::size_t>();
  c.survival_b = g("problem.survival.b").get<int>();
  c.pb_mode = g("problem.preece_baines.mode").get<std::string>();

  DiscrepancyConfig& d = c.pipeline.discrepancy;
  d.kind = g("discrepancy.kind").get<std::string>() == "ad" ? DiscrepancyKind::kAD
                                                             : DiscrepancyKind::kCvM;
  d.n_predictive = g("discrepancy.n_predictive").get<std::size_t>();
  d.n_importance = g("discrepancy.n_importance").get<std::size_t>();
  d.cache_target_samples = g("discrepancy.cache_target_samples").get<bool>();
  d.row_threads = g("discrepancy.row_threads").get<int>();
  d.widening = g("importance.widening").get<double>();
  d.proposal = g("importance.proposal").get<std::string>() == "uniform"
                   ? ProposalKind::kUniform
                   : ProposalKind::kMomentMatched;

  OptimizerConfig& o = c.pipeline.optimizer;
  o.n_crs2 = g("optimizer.n_crs2").get<std::size_t>();
  o.n_batch = g("optimizer.n_batch").get<std::size_t>();
  o.n_bo = g("optimizer.n_bo").get<std::size_t>();
  o.n_design = g("optimizer.n_design").get<std::size_t>();
  o.n_pad = g("optimizer.n_pad").get<std::size_t>();
  o.n_new = g("optimizer.n_new").get<std::size_t>();
  o.n_eval = g("optimizer.n_eval").get<std::size_t>();
  o.crs2_population = g("optimizer.crs2_population").get<std::size_t>();
  o.weight_scale = g("design.weight_scale").get<std::string>() == "neg_log_D"
                       ? WeightScale::kNegLogD
                       : WeightScale::kNegD;
  o.gp.restarts = g("gp.restarts").get<int>();
  o.gp.max_iter = g("gp.max_iter").get<int>();

  c.mc_draws = g("secondary.mc_draws").get<std::size_t>();
  c.pipeline.kappas = g("kappa.grid").get<std::vector<double>>();
  if (!g("kappa.primary").is_null()) c.kappa_primary = g("kappa.primary").get<double>();

  c.pipeline.seed = g("run.seed").get<std::uint64_t>();
  c.replicates = g("run.replicates").get<std::size_t>();
  c.out_dir = g("run.out").get<std::string>();
  c.jobs = g("run.jobs").get<std::size_t>();
  c.optimum_samples = g("run.optimum_samples").get<std::size_t>();
  return c;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file '" + path + "'"});
  try {
    return json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError({"config file '" + path + "' does not parse: " + e.what()});
  }
}

Problem build_problem(const RunConfig& c) {
  Problem p = [&]() -> Problem {
    if (c.problem == "survival") {
      return make_survival_problem(
          simulate_survival_data(c.survival_n, c.survival_b, c.data_seed));
    }
    if (c.problem == "preece_baines") {
      return make_pb_problem(c.pb_mode == "population" ? PbMode::kCovariateIndependent
                                                       : PbMode::kCovariateSpecific);
    }
    R2Prior kind = r2_prior_from_name(c.r2_prior);
    Eigen::MatrixXd x = simulate_r2_design(c.r2_n, c.r2_p, c.data_seed);
    TargetSpec target =
        c.r2_roundtrip_lambda.empty()
            ? r2_beta_target(c.r2_target_shapes[0], c.r2_target_shapes[1])
            : r2_moment_target(kind, c.r2_roundtrip_lambda, x, c.r2_roundtrip_draws,
                               derive_seed(c.data_seed, {1}));
    return make_r2_problem(kind, x, std::move(target));
  }();
  p.secondary.mc_draws = c.mc_draws;
  return p;
}

std::uint64_t replicate_seed(std::uint64_t seed, std::size_t replicate) {
  return derive_seed(seed, {0x5eedULL, replicate});
}

}  // namespace ptx
