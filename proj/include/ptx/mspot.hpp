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

#ifndef PTX_MSPOT_HPP_
#define PTX_MSPOT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ptx/bounds.hpp"
#include "ptx/crs2.hpp"
#include "ptx/design.hpp"
#include "ptx/gp.hpp"
#include "ptx/objectives.hpp"
#include "ptx/rng.hpp"

namespace ptx {

// Objective evaluated with an explicit per-call seed.
using SeededObjective =
    std::function<double(std::span<const double> lambda, std::uint64_t seed)>;

// How stage-1 rows are weighted when subsampled into a design: softmax of
// -exp(log_D) or of -log_D.
enum class WeightScale { kNegD, kNegLogD };

// exp(v_i - log_sum_exp(v)).
std::vector<double> softmax_weights(std::span<const double> values);

// Successive sampling proportional to the remaining weights; uniform over
// the remainder once every remaining weight is zero.
std::vector<std::size_t> weighted_sample_without_replacement(
    std::span<const double> weights, std::size_t k, Rng& rng);

// Non-dominated rows of a design in (log_D, N). Construction verifies that
// no member is dominated by another.
class ParetoFront {
 public:
  static ParetoFront from_design(const Design& design);
  explicit ParetoFront(std::vector<DesignRow> rows);

  const std::vector<DesignRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  std::vector<FrontierPoint> points() const;

 private:
  std::vector<DesignRow> rows_;
};

// Weighted subsample of n_design distinct trace rows plus n_pad Latin
// hypercube points evaluated through f_D.
Design build_initial_design(std::span<const TracePoint> trace,
                            std::size_t n_design, std::size_t n_pad,
                            const Bounds& bounds, const SeededObjective& f_D,
                            Rng& rng, WeightScale scale = WeightScale::kNegD);

struct MspotConfig {
  std::size_t n_bo = 200;
  std::size_t n_new = 1000;
  std::size_t n_eval = 1;
  GpOptions gp;
};

struct MspotResult {
  ParetoFront front;
  Design design;
  std::size_t gp_fallbacks = 0;
  std::vector<std::string> warnings;
};

// Fills missing N values, then runs n_bo surrogate-screened iterations and
// returns the final frontier with the grown design.
MspotResult mspot_batch(const SeededObjective& f_D, const SeededObjective& f_N,
                        Design design, const MspotConfig& cfg,
                        const Bounds& bounds, Rng& rng);

// Frontier rows, a weighted sample of max(n_design - |front|, 0) other
// evaluated rows, and n_pad fresh Latin hypercube rows.
Design resample_batch(const ParetoFront& front, const Design& evaluated,
                      std::size_t n_design, std::size_t n_pad,
                      const Bounds& bounds, const SeededObjective& f_D,
                      const SeededObjective& f_N, Rng& rng,
                      WeightScale scale = WeightScale::kNegD);

}  // namespace ptx

#endif  // PTX_MSPOT_HPP_
