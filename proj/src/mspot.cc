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

#include "ptx/mspot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ptx/lhs.hpp"
#include "ptx/logspace.hpp"
#include "ptx/pareto.hpp"

namespace ptx {
namespace {

enum StreamTag : std::uint64_t {
  kSubsample = 1,
  kPad = 2,
  kFillN = 3,
  kCandidates = 4,
  kGpFit = 5,
  kEval = 6,
};

std::vector<double> design_weights(std::span<const double> log_d, WeightScale scale) {
  std::vector<double> w(log_d.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = scale == WeightScale::kNegD ? -std::exp(log_d[i]) : -log_d[i];
  }
  return softmax_weights(w);
}

std::vector<Point2> objective_points(const std::vector<DesignRow>& rows) {
  std::vector<Point2> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) pts.push_back({r.log_D, *r.N});
  return pts;
}

Eigen::MatrixXd unit_inputs(const Design& d, const Bounds& b) {
  Eigen::MatrixXd x(d.size(), b.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto u = b.to_unit(d.rows()[i].lambda);
    for (std::size_t j = 0; j < u.size(); ++j) x(i, j) = u[j];
  }
  return x;
}

void require_inside(const Bounds& b, std::span<const double> x) {
  if (!b.contains(x)) throw std::logic_error("optimizer: lambda outside the bounds");
}

}  // namespace

std::vector<double> softmax_weights(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("softmax: empty input");
  double lse = log_sum_exp(values);
  std::vector<double> w(values.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(values[i] - lse);
  return w;
}

std::vector<std::size_t> weighted_sample_without_replacement(
    std::span<const double> weights, std::size_t k, Rng& rng) {
  if (k > weights.size()) {
    throw std::invalid_argument("weighted sample: k exceeds population");
  }
  std::vector<double> w(weights.begin(), weights.end());
  std::vector<bool> taken(w.size(), false);
  std::vector<std::size_t> out;
  out.reserve(k);
  while (out.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!taken[i]) total += w[i];
    }
    std::size_t pick = w.size();
    if (total > 0.0) {
      double u = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (taken[i] || w[i] <= 0.0) continue;
        acc += w[i];
        pick = i;
        if (u < acc) break;
      }
    } else {
      std::size_t left = w.size() - out.size();
      std::size_t j = rng.index(left);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (taken[i]) continue;
        if (j-- == 0) {
          pick = i;
          break;
        }
      }
    }
    taken[pick] = true;
    out.push_back(pick);
  }
  return out;
}

ParetoFront::ParetoFront(std::vector<DesignRow> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (!r.N) throw std::invalid_argument("pareto front: row lacks N");
  }
  auto pts = objective_points(rows_);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (dominates(pts[j], pts[i])) {
        throw std::logic_error("pareto front: dominated member");
      }
    }
  }
}

ParetoFront ParetoFront::from_design(const Design& design) {
  std::vector<DesignRow> with_n;
  for (const auto& r : design.rows()) {
    if (r.N) with_n.push_back(r);
  }
  if (with_n.empty()) throw std::invalid_argument("pareto front: no complete rows");
  auto pts = objective_points(with_n);
  std::vector<DesignRow> rows;
  for (std::size_t i : pareto_front(pts)) rows.push_back(with_n[i]);
  return ParetoFront(std::move(rows));
}

std::vector<FrontierPoint> ParetoFront::points() const {
  std::vector<FrontierPoint> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back({r.lambda, r.log_D, *r.N});
  return out;
}

Design build_initial_design(std::span<const TracePoint> trace,
                            std::size_t n_design, std::size_t n_pad,
                            const Bounds& bounds, const SeededObjective& f_D,
                            Rng& rng, WeightScale scale) {
  if (trace.size() < n_design) {
    throw std::invalid_argument("initial design: trace shorter than n_design");
  }
  Design unique(bounds);
  for (const auto& t : trace) unique.add({t.x, t.f, std::nullopt, 1});
  std::vector<double> log_d;
  for (const auto& r : unique.rows()) log_d.push_back(r.log_D);
  std::vector<double> w = design_weights(log_d, scale);
  std::size_t k = std::min(n_design, unique.size());
  Rng sub = rng.split(kSubsample);
  Design design(bounds);
  for (std::size_t i : weighted_sample_without_replacement(w, k, sub)) {
    design.add(unique.rows()[i]);
  }
  Rng pad = rng.split(kPad);
  auto pts = n_pad > 0 ? latin_hypercube(n_pad, bounds, pad)
                       : std::vector<std::vector<double>>{};
  for (std::size_t i = 0; i < n_pad; ++i) {
    require_inside(bounds, pts[i]);
    double v = f_D(pts[i], rng.split({kPad, i}).seed());
    design.add({pts[i], v, std::nullopt, 1});
  }
  return design;
}

MspotResult mspot_batch(const SeededObjective& f_D, const SeededObjective& f_N,
                        Design design, const MspotConfig& cfg,
                        const Bounds& bounds, Rng& rng) {
  if (cfg.n_eval < 1 || cfg.n_eval > cfg.n_new) {
    throw std::invalid_argument("mspot: need 1 <= n_eval <= n_new");
  }
  MspotResult out{ParetoFront(std::vector<DesignRow>{}), Design(bounds), 0, {}};
  for (std::size_t i = 0; i < design.size(); ++i) {
    auto& row = design.mutable_rows()[i];
    if (!row.N) row.N = f_N(row.lambda, rng.split({kFillN, i}).seed());
  }

  for (std::size_t t = 0; t < cfg.n_bo; ++t) {
    Rng cand_rng = rng.split({kCandidates, t});
    std::vector<std::vector<double>> chosen;
    try {
      Eigen::MatrixXd x = unit_inputs(design, bounds);
      Eigen::VectorXd yd(design.size());
      Eigen::VectorXd yn(design.size());
      for (std::size_t i = 0; i < design.size(); ++i) {
        yd(i) = design.rows()[i].log_D;
        yn(i) = *design.rows()[i].N;
      }
      Rng gp_d = rng.split({kGpFit, t, 0});
      Rng gp_n = rng.split({kGpFit, t, 1});
      GpSurrogate gd = GpSurrogate::fit(x, yd, gp_d, cfg.gp);
      GpSurrogate gn = GpSurrogate::fit(x, yn, gp_n, cfg.gp);

      auto cand = latin_hypercube_unit(cfg.n_new, bounds.dim(), cand_rng);
      Eigen::MatrixXd xs(cand.size(), bounds.dim());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        for (std::size_t j = 0; j < bounds.dim(); ++j) xs(i, j) = cand[i][j];
      }
      Eigen::VectorXd md, mn;
      gd.predict(xs, &md, nullptr);
      gn.predict(xs, &mn, nullptr);
      std::vector<Point2> pred(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) pred[i] = {md(i), mn(i)};

      std::vector<int> rank = nds_rank(pred);
      Point2 ref = reference_point(pred);
      std::vector<double> hvc(cand.size(), 0.0);
      int max_rank = *std::max_element(rank.begin(), rank.end());
      std::size_t covered = 0;
      for (int level = 1; level <= max_rank && covered < cfg.n_eval; ++level) {
        std::vector<std::size_t> members;
        std::vector<Point2> sub;
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (rank[i] == level) {
            members.push_back(i);
            sub.push_back(pred[i]);
          }
        }
        auto c = hypervolume_contribution(sub, ref);
        for (std::size_t k = 0; k < members.size(); ++k) hvc[members[k]] = c[k];
        covered += members.size();
      }
      std::vector<std::size_t> order(cand.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        return hvc[a] > hvc[b];
      });
      for (std::size_t k = 0; k < cfg.n_eval; ++k) {
        chosen.push_back(bounds.from_unit(cand[order[k]]));
      }
    } catch (const GpFitError& e) {
      ++out.gp_fallbacks;
      out.warnings.push_back("iteration " + std::to_string(t) + ": " + e.what() +
                             "; using Latin hypercube proposals");
      chosen = latin_hypercube(cfg.n_eval, bounds, cand_rng);
    }
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      require_inside(bounds, chosen[j]);
      std::uint64_t seed = rng.split({kEval, t, j}).seed();
      double d = f_D(chosen[j], seed);
      double n = f_N(chosen[j], seed);
      design.add({std::move(chosen[j]), d, n, 1});
    }
  }
  out.front = ParetoFront::from_design(design);
  out.design = std::move(design);
  return out;
}

Design resample_batch(const ParetoFront& front, const Design& evaluated,
                      std::size_t n_design, std::size_t n_pad,
                      const Bounds& bounds, const SeededObjective& f_D,
                      const SeededObjective& f_N, Rng& rng, WeightScale scale) {
  Design out(bounds);
  for (const auto& r : front.rows()) out.add(r);
  std::vector<const DesignRow*> others;
  for (const auto& r : evaluated.rows()) {
    bool on_front = false;
    for (const auto& f : front.rows()) {
      if (same_lambda(f.lambda, r.lambda)) {
        on_front = true;
        break;
      }
    }
    if (!on_front) others.push_back(&r);
  }
  std::size_t extra = n_design > front.size() ? n_design - front.size() : 0;
  extra = std::min(extra, others.size());
  if (extra > 0) {
    std::vector<double> log_d;
    for (const auto* r : others) log_d.push_back(r->log_D);
    std::vector<double> w = design_weights(log_d, scale);
    Rng sub = rng.split(kSubsample);
    for (std::size_t i : weighted_sample_without_replacement(w, extra, sub)) {
      out.add(*others[i]);
    }
  }
  Rng pad = rng.split(kPad);
  auto pts = n_pad > 0 ? latin_hypercube(n_pad, bounds, pad)
                       : std::vector<std::vector<double>>{};
  for (std::size_t i = 0; i < n_pad; ++i) {
    require_inside(bounds, pts[i]);
    std::uint64_t seed = rng.split({kPad, i}).seed();
    double d = f_D(pts[i], seed);
    double n = f_N(pts[i], seed);
    out.add({pts[i], d, n, 1});
  }
  return out;
}

}  // namespace ptx
