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

#include "ptx/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptx {
namespace {

constexpr double kQnConstant = 2.2219;

double sample_sd(const Eigen::VectorXd& x) {
  if (x.size() < 2) return 0.0;
  double mean = x.mean();
  return std::sqrt((x.array() - mean).square().sum() /
                   static_cast<double>(x.size() - 1));
}

}  // namespace

double robust_scale(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("robust_scale: need at least 2 values");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  const std::size_t h = n / 2 + 1;
  const std::size_t k = h * (h - 1) / 2;
  // Number of pairs i < j with s[j] - s[i] <= d.
  auto count = [&](double d) {
    std::size_t c = 0;
    std::size_t i = 0;
    for (std::size_t j = 1; j < n; ++j) {
      while (s[j] - s[i] > d) ++i;
      c += j - i;
    }
    return c;
  };
  double lo = 0.0;
  double hi = s.back() - s.front();
  if (count(lo) >= k) return 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (count(mid) >= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return kQnConstant * hi;
}

std::vector<double> marginal_sds(std::span<const double> lambda,
                                 const PriorModel& prior,
                                 const SecondaryConfig& cfg, Rng& rng) {
  const std::size_t q = prior.names.size();
  if (q == 0) throw std::invalid_argument("secondary: no parameters");
  if (cfg.sources.size() != q) {
    throw std::invalid_argument("secondary: one SD source per parameter");
  }
  if (cfg.mc_draws < 100) {
    throw std::invalid_argument("secondary: mc_draws must be >= 100");
  }
  std::vector<double> analytic;
  bool need_analytic = false;
  for (SdSource s : cfg.sources) {
    need_analytic |= s == SdSource::kAnalytic || s == SdSource::kAnalyticOrRobust;
  }
  if (need_analytic) {
    if (!prior.analytic_sd) {
      throw std::invalid_argument("secondary: analytic SDs requested but unavailable");
    }
    analytic = prior.analytic_sd(lambda);
    if (analytic.size() != q) {
      throw std::logic_error("secondary: analytic SD vector has wrong length");
    }
  }
  std::vector<double> sd(q);
  std::vector<bool> need_mc(q, false);
  bool any_mc = false;
  for (std::size_t j = 0; j < q; ++j) {
    switch (cfg.sources[j]) {
      case SdSource::kAnalytic:
        sd[j] = analytic[j];
        break;
      case SdSource::kAnalyticOrRobust:
        if (std::isfinite(analytic[j]) && analytic[j] > 0.0) {
          sd[j] = analytic[j];
          break;
        }
        [[fallthrough]];
      case SdSource::kMonteCarlo:
      case SdSource::kRobust:
        need_mc[j] = true;
        any_mc = true;
        break;
    }
  }
  if (any_mc) {
    Eigen::MatrixXd draws = prior.sampler(lambda, cfg.mc_draws, rng);
    if (static_cast<std::size_t>(draws.cols()) != q) {
      throw std::logic_error("secondary: prior sampler returned wrong width");
    }
    for (std::size_t j = 0; j < q; ++j) {
      if (!need_mc[j]) continue;
      Eigen::VectorXd col = draws.col(static_cast<Eigen::Index>(j));
      if (cfg.sources[j] == SdSource::kMonteCarlo) {
        sd[j] = sample_sd(col);
      } else {
        sd[j] = robust_scale(std::span<const double>(col.data(), col.size()));
      }
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (!std::isfinite(sd[j]) || !(sd[j] > 0.0)) {
      throw std::domain_error("secondary: SD of '" + prior.names[j] +
                              "' is not finite and positive");
    }
  }
  return sd;
}

double secondary_objective(std::span<const double> lambda,
                           const PriorModel& prior, const SecondaryConfig& cfg,
                           Rng& rng) {
  std::vector<double> sd = marginal_sds(lambda, prior, cfg, rng);
  double acc = 0.0;
  for (double s : sd) acc += std::log(s);
  return -acc / static_cast<double>(sd.size());
}

double loss(double log_D, double N, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("loss: kappa must be > 0");
  return log_D + kappa * N;
}

KappaSweep kappa_sweep(std::span<const FrontierPoint> front,
                       std::span<const double> kappas) {
  if (front.empty()) throw std::invalid_argument("kappa_sweep: empty frontier");
  KappaSweep out;
  out.kappas.assign(kappas.begin(), kappas.end());
  for (double kappa : kappas) {
    std::vector<double> l(front.size());
    for (std::size_t i = 0; i < front.size(); ++i) {
      l[i] = loss(front[i].log_D, front[i].N, kappa);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < front.size(); ++i) {
      const auto& a = front[i];
      const auto& b = front[best];
      if (l[i] < l[best] ||
          (l[i] == l[best] &&
           (a.log_D < b.log_D ||
            (a.log_D == b.log_D && a.lambda < b.lambda)))) {
        best = i;
      }
    }
    out.selected.push_back(best);
    out.losses.push_back(std::move(l));
  }
  return out;
}

}  // namespace ptx
