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

#include "ptx/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptx {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_lambda(std::ostream& os, const std::vector<double>& lambda) {
  for (double v : lambda) os << ',' << format_double(v);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("frontier csv line " + std::to_string(line) +
                             ": not a number: '" + s + "'");
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_frontier_csv(const std::filesystem::path& path,
                        const std::vector<std::string>& names,
                        const std::vector<FrontierPoint>& frontier) {
  auto out = open_out(path);
  out << "index";
  for (const auto& n : names) out << ',' << n;
  out << ",log_D,N\n";
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    out << i;
    write_lambda(out, frontier[i].lambda);
    out << ',' << format_double(frontier[i].log_D) << ',' << format_double(frontier[i].N)
        << '\n';
  }
}

FrontierFile read_frontier_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("frontier csv is empty");
  std::vector<std::string> head = split_csv(line);
  if (head.size() < 4 || head.front() != "index" || head[head.size() - 2] != "log_D" ||
      head.back() != "N") {
    throw std::runtime_error("frontier csv line 1: expected index,<lambda...>,log_D,N");
  }
  FrontierFile f;
  f.names.assign(head.begin() + 1, head.end() - 2);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv(line);
    if (cells.size() != head.size()) {
      throw std::runtime_error("frontier csv line " + std::to_string(lineno) + ": expected " +
                               std::to_string(head.size()) + " fields, got " +
                               std::to_string(cells.size()));
    }
    FrontierPoint p;
    for (std::size_t j = 1; j + 2 < cells.size(); ++j) {
      p.lambda.push_back(parse_double(cells[j], lineno));
    }
    p.log_D = parse_double(cells[cells.size() - 2], lineno);
    p.N = parse_double(cells.back(), lineno);
    f.points.push_back(std::move(p));
  }
  if (f.points.empty()) throw std::runtime_error("frontier csv has no rows");
  return f;
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<std::string>& names,
                     const std::vector<FrontierPoint>& frontier, const KappaSweep& sweep) {
  auto out = open_out(path);
  out << "kappa,frontier_index";
  for (const auto& n : names) out << ',' << n;
  out << ",log_D,N,loss,selected\n";
  for (std::size_t k = 0; k < sweep.kappas.size(); ++k) {
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const FrontierPoint& p = frontier[i];
      out << format_double(sweep.kappas[k]) << ',' << i;
      write_lambda(out, p.lambda);
      out << ',' << format_double(p.log_D) << ',' << format_double(p.N) << ','
          << format_double(sweep.losses[k][i]) << ',' << (sweep.selected[k] == i ? 1 : 0)
          << '\n';
    }
  }
}

void write_evaluations_csv(const std::filesystem::path& path,
                           const std::vector<std::string>& names,
                           const std::vector<EvaluationRecord>& evals) {
  auto out = open_out(path);
  out << "stage,batch";
  for (const auto& n : names) out << ',' << n;
  out << ",log_D,N\n";
  for (const auto& e : evals) {
    out << e.stage << ',' << e.batch;
    write_lambda(out, e.lambda);
    out << ',' << format_double(e.log_D) << ',' << (e.N ? format_double(*e.N) : "") << '\n';
  }
}

void write_samples_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& names, const Eigen::MatrixXd& draws) {
  auto out = open_out(path);
  out << "draw";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (Eigen::Index i = 0; i < draws.rows(); ++i) {
    out << i;
    for (Eigen::Index j = 0; j < draws.cols(); ++j) out << ',' << format_double(draws(i, j));
    out << '\n';
  }
}

json run_summary_json(const Problem& problem, const RunResult& r, const json& config,
                      std::size_t replicate, double primary_kappa) {
  json j;
  j["problem"] = problem.name;
  j["replicate"] = replicate;
  j["seed"] = r.seed;
  j["lambda_names"] = problem.bounds.names();
  j["theta_names"] = problem.prior.names;
  j["frontier_size"] = r.frontier.size();
  j["primary_kappa"] = primary_kappa;
  json opt = json::array();
  for (std::size_t k = 0; k < r.sweep.kappas.size(); ++k) {
    const std::size_t i = r.sweep.selected[k];
    const FrontierPoint& p = r.frontier[i];
    opt.push_back({{"kappa", r.sweep.kappas[k]},
                   {"frontier_index", i},
                   {"lambda", p.lambda},
                   {"log_D", p.log_D},
                   {"N", p.N},
                   {"loss", r.sweep.losses[k][i]}});
  }
  j["optima"] = opt;
  const RunDiagnostics& d = r.diagnostics;
  j["diagnostics"] = {{"discrepancy_evaluations", d.n_discrepancy_evals},
                      {"secondary_evaluations", d.n_secondary_evals},
                      {"ad_fallbacks", d.ad_fallbacks},
                      {"gp_fallbacks", d.gp_fallbacks},
                      {"crs2_population", d.crs2_population},
                      {"messages", d.messages}};
  j["config"] = config;
  return j;
}

json timings_json(const RunTimings& t) {
  return {{"stage1_seconds", t.stage1_seconds},
          {"stage2_seconds", t.stage2_seconds},
          {"total_seconds", t.total_seconds}};
}

void write_json(const std::filesystem::path& path, const json& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

}  // namespace ptx
