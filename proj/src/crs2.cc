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

#include "ptx/crs2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptx {

std::size_t crs2_population_size(std::size_t dim) {
  return std::max(10 * (dim + 1), 2 * dim + 2);
}

std::vector<TracePoint> crs2_minimize(const Objective& f, const Bounds& bounds,
                                      std::size_t n_iters, Rng& rng,
                                      std::size_t population) {
  const std::size_t n = bounds.dim();
  const std::size_t np = population ? population : crs2_population_size(n);
  if (np < n + 2) throw std::invalid_argument("crs2: population below dim + 2");
  if (n_iters < np) {
    throw std::invalid_argument("crs2: n_iters below the population size");
  }
  const auto& lb = bounds.lower();
  const auto& ub = bounds.upper();

  std::vector<TracePoint> trace;
  trace.reserve(n_iters);
  auto evaluate = [&](std::vector<double> x) -> const TracePoint& {
    if (!bounds.contains(x)) throw std::logic_error("crs2: trial outside bounds");
    double v = f(x);
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    trace.push_back({std::move(x), v});
    return trace.back();
  };

  std::vector<TracePoint> pop;
  pop.reserve(np);
  for (std::size_t i = 0; i < np; ++i) {
    std::vector<double> x(n);
    for (std::size_t d = 0; d < n; ++d) x[d] = rng.uniform(lb[d], ub[d]);
    pop.push_back(evaluate(std::move(x)));
  }

  auto best_index = [&] {
    return static_cast<std::size_t>(
        std::min_element(pop.begin(), pop.end(),
                         [](const auto& a, const auto& b) { return a.f < b.f; }) -
        pop.begin());
  };
  auto worst_index = [&] {
    return static_cast<std::size_t>(
        std::max_element(pop.begin(), pop.end(),
                         [](const auto& a, const auto& b) { return a.f < b.f; }) -
        pop.begin());
  };

  std::vector<std::size_t> picks;
  std::vector<double> trial(n);
  while (trace.size() < n_iters) {
    const std::size_t ib = best_index();
    const std::size_t iw = worst_index();
    const std::vector<double>& best = pop[ib].x;

    // Centroid of best plus n - 1 other points; reflect one more through it.
    picks.clear();
    while (picks.size() < n) {
      std::size_t k = rng.index(np);
      if (k == ib || std::find(picks.begin(), picks.end(), k) != picks.end()) {
        continue;
      }
      picks.push_back(k);
    }
    for (std::size_t d = 0; d < n; ++d) {
      double c = best[d];
      for (std::size_t j = 0; j + 1 < n; ++j) c += pop[picks[j]].x[d];
      c /= static_cast<double>(n);
      trial[d] = 2.0 * c - pop[picks[n - 1]].x[d];
    }
    if (!bounds.contains(trial)) {
      for (std::size_t d = 0; d < n; ++d) {
        double w = rng.uniform();
        trial[d] = std::clamp(w * best[d] + (1.0 - w) * trial[d], lb[d], ub[d]);
      }
    }
    TracePoint candidate = evaluate(trial);
    if (candidate.f >= pop[iw].f && trace.size() < n_iters) {
      // Local mutation around the best point.
      for (std::size_t d = 0; d < n; ++d) {
        double w = rng.uniform();
        trial[d] = std::clamp((1.0 + w) * best[d] - w * candidate.x[d], lb[d], ub[d]);
      }
      candidate = evaluate(trial);
    }
    if (candidate.f < pop[iw].f) pop[iw] = std::move(candidate);
  }
  return trace;
}

}  // namespace ptx
