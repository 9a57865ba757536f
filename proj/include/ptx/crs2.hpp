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

#ifndef PTX_CRS2_HPP_
#define PTX_CRS2_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ptx/bounds.hpp"
#include "ptx/rng.hpp"

namespace ptx {

struct TracePoint {
  std::vector<double> x;
  double f;
};

using Objective = std::function<double(std::span<const double>)>;

// max(10 (dim + 1), 2 dim + 2).
std::size_t crs2_population_size(std::size_t dim);

// Controlled random search (CRS2) with local mutation. Every evaluation,
// including the initial population, is appended to the returned trace, so
// the trace has exactly n_iters entries. Throws std::invalid_argument when
// n_iters is below the population size.
std::vector<TracePoint> crs2_minimize(const Objective& f, const Bounds& bounds,
                                      std::size_t n_iters, Rng& rng,
                                      std::size_t population = 0);

}  // namespace ptx

#endif  // PTX_CRS2_HPP_
