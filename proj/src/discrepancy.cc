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

#include "ptx/discrepancy.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "ptx/ecdf.hpp"
#include "ptx/logspace.hpp"

namespace ptx {
namespace {

enum Substream : std::uint64_t { kPredictive = 0, kTarget = 1, kProposal = 2 };

double kish_ess(std::span<const double> z) {
  double m = kNegInf;
  for (double v : z) m = std::max(m, v);
  if (m == kNegInf) return 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  for (double v : z) {
    double w = std::exp(v - m);
    s1 += w;
    s2 += w * w;
  }
  return s1 * s1 / s2;
}

}  // namespace

double log_cvm_term(double p_hat, double lcdf_t) {
  if (lcdf_t == kNegInf) {
    return p_hat > 0.0 ? 2.0 * std::log(p_hat) : kLogFloor;
  }
  if (p_hat <= 0.0) return 2.0 * lcdf_t;
  double d = log_abs_diff_exp(std::log(p_hat), lcdf_t);
  return d == kNegInf ? kLogFloor : 2.0 * d;
}

AdTerm log_ad_term(double p_hat, double lcdf_t) {
  double cvm = log_cvm_term(p_hat, lcdf_t);
  if (!(lcdf_t < 0.0) || lcdf_t == kNegInf) return {cvm, true};
  double v = cvm - lcdf_t - log1mexp(-lcdf_t);
  if (!std::isfinite(v)) return {cvm, true};
  return {v, false};
}

DiscrepancyEvaluator::DiscrepancyEvaluator(const TargetSet& targets,
                                           PredictiveSampler sampler,
                                           DiscrepancyConfig cfg)
    : targets_(targets), sampler_(std::move(sampler)), cfg_(cfg) {
  if (cfg_.n_predictive < 1 || cfg_.n_importance < 1) {
    throw std::invalid_argument("discrepancy: sample counts must be >= 1");
  }
  if (!sampler_) throw std::invalid_argument("discrepancy: no predictive sampler");
  if (cfg_.cache_target_samples) {
    Rng base(cfg_.target_cache_seed);
    for (std::size_t r = 0; r < targets_.size(); ++r) {
      std::uint64_t key = targets_.row(r).stream_key.value_or(r);
      Rng rng = base.split({key, kTarget});
      cached_targets_.push_back(targets_.target(r).sample(cfg_.n_predictive, rng));
    }
  }
}

DiscrepancyEvaluator::RowResult DiscrepancyEvaluator::evaluate_row(
    std::span<const double> lambda, std::size_t r, const Rng& base) const {
  const TargetSpec& target = targets_.target(r);
  std::uint64_t key = targets_.row(r).stream_key.value_or(r);
  RowResult out{kNegInf, 0, 0.0, {}};

  Rng rng_p = base.split({key, kPredictive});
  std::vector<double> yp = sampler_(lambda, r, cfg_.n_predictive, rng_p);
  if (yp.empty()) {
    throw std::runtime_error("predictive sampler returned no draws for covariate row " +
                             std::to_string(r));
  }
  for (double y : yp) {
    if (!std::isfinite(y)) {
      throw std::runtime_error(
          "predictive sampler produced a non-finite draw for covariate row " +
          std::to_string(r));
    }
  }
  std::vector<double> yt_local;
  const std::vector<double>* yt = nullptr;
  if (cfg_.cache_target_samples) {
    yt = &cached_targets_[r];
  } else {
    Rng rng_t = base.split({key, kTarget});
    yt_local = target.sample(cfg_.n_predictive, rng_t);
    yt = &yt_local;
  }

  ImportanceProposal q =
      cfg_.proposal == ProposalKind::kUniform
          ? uniform_proposal(target.support())
          : select_proposal(target.support(), yp, *yt, cfg_.widening);
  for (auto& d : q.diagnostics) {
    out.diagnostics.push_back("row " + std::to_string(r) + ": " + d);
  }
  Ecdf ecdf(std::move(yp));
  Rng rng_q = base.split({key, kProposal});
  std::vector<double> yq = sample_proposal(q, cfg_.n_importance, rng_q);

  std::vector<double> z(yq.size());
  for (std::size_t i = 0; i < yq.size(); ++i) {
    double y = yq[i];
    double lt = target.log_cdf(y);
    double p = ecdf.eval(y);
    double term;
    if (cfg_.kind == DiscrepancyKind::kAD) {
      AdTerm ad = log_ad_term(p, lt);
      term = ad.value;
      out.fallbacks += ad.fallback ? 1 : 0;
    } else {
      term = log_cvm_term(p, lt);
    }
    double lq = log_atom_mass(q.mixture, y);
    double ldens;
    if (lq > kNegInf) {
      ldens = target.log_atom_mass(y);
    } else {
      lq = log_continuous_density(q.mixture, y);
      ldens = target.log_continuous_density(y);
    }
    z[i] = (lq == kNegInf || ldens == kNegInf) ? kNegInf : term + ldens - lq;
  }
  double lse = log_sum_exp(z);
  out.log_mean = lse == kNegInf
                     ? kNegInf
                     : lse - std::log(static_cast<double>(z.size()));
  out.ess = kish_ess(z);
  return out;
}

DiscrepancyEstimate DiscrepancyEvaluator::evaluate(
    std::span<const double> lambda, std::uint64_t seed) const {
  const std::size_t R = targets_.size();
  Rng base(seed);
  std::vector<RowResult> rows(R);
  int threads = std::max(1, cfg_.row_threads);
  if (threads == 1 || R == 1) {
    for (std::size_t r = 0; r < R; ++r) rows[r] = evaluate_row(lambda, r, base);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = t; r < R; r += threads) {
            rows[r] = evaluate_row(lambda, r, base);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  DiscrepancyEstimate est;
  est.per_row.reserve(R);
  for (auto& row : rows) {
    est.per_row.push_back(row.log_mean);
    est.ess.push_back(row.ess);
    est.n_fallbacks += row.fallbacks;
    for (auto& d : row.diagnostics) est.diagnostics.push_back(std::move(d));
  }
  double lse = log_sum_exp(est.per_row);
  if (lse == kNegInf) {
    est.log_D = kLogFloor;
    est.diagnostics.push_back("all importance terms are -inf; log_D floored");
  } else {
    est.log_D = lse - std::log(static_cast<double>(R));
  }
  return est;
}

DiscrepancyEstimate log_total_discrepancy(std::span<const double> lambda,
                                          const TargetSet& targets,
                                          const PredictiveSampler& sampler,
                                          const DiscrepancyConfig& cfg,
                                          std::uint64_t seed) {
  return DiscrepancyEvaluator(targets, sampler, cfg).evaluate(lambda, seed);
}

}  // namespace ptx
