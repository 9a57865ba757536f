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

#ifndef PTX_TARGET_HPP_
#define PTX_TARGET_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ptx/distributions.hpp"
#include "ptx/rng.hpp"

namespace ptx {

enum class SupportKind { kRealLine, kPositiveHalfLine, kBounded };

// Support of the observable: the real line, (0, inf), or (0, upper].
struct Support {
  SupportKind kind = SupportKind::kRealLine;
  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> atoms;

  static Support real_line();
  static Support positive_half_line();
  static Support bounded(double upper, std::vector<double> atoms = {});

  bool contains(double y) const;
  void validate() const;
};

// An elicited target distribution for one covariate row.
class TargetSpec {
 public:
  // Validates that draws land inside the support.
  TargetSpec(MixtureSpec dist, Support support, std::string label = "");

  // Wraps a plain CDF. The log is guarded so that F = 0 maps to -inf.
  // `density` is the continuous density and `atoms` any point masses.
  static TargetSpec from_cdf(std::function<double(double)> cdf,
                             std::function<double(double)> density,
                             std::function<double(Rng&)> sampler,
                             Support support, std::vector<Atom> atoms = {},
                             std::string label = "");

  const Support& support() const { return support_; }
  const std::string& label() const { return label_; }
  // Set for mixture-backed targets.
  const std::optional<MixtureSpec>& mixture() const { return dist_; }

  double log_cdf(double y) const;
  double log_density(double y) const;
  double log_continuous_density(double y) const;
  double log_atom_mass(double y) const;
  double draw(Rng& rng) const;
  std::vector<double> sample(std::size_t n, Rng& rng) const;

 private:
  TargetSpec() = default;
  void check_draws() const;

  std::optional<MixtureSpec> dist_;
  std::function<double(double)> cdf_;
  std::function<double(double)> density_;
  std::function<double(Rng&)> sampler_;
  std::vector<Atom> atoms_;
  Support support_;
  std::string label_;
};

// Conditioning values for one target: covariates plus any scalars such as
// a censoring time. Covariate-independent targets use an empty row.
struct CovariateRow {
  std::vector<double> values;
  // Random-stream key for this row; the row index when unset.
  std::optional<std::uint64_t> stream_key;
};

class TargetSet {
 public:
  TargetSet(std::vector<CovariateRow> rows, std::vector<TargetSpec> targets);
  // A single target with an empty covariate row.
  explicit TargetSet(TargetSpec target);

  std::size_t size() const { return targets_.size(); }
  const CovariateRow& row(std::size_t r) const { return rows_.at(r); }
  const TargetSpec& target(std::size_t r) const { return targets_.at(r); }

 private:
  std::vector<CovariateRow> rows_;
  std::vector<TargetSpec> targets_;
};

// Throws std::out_of_range for r >= size().
double target_log_cdf(const TargetSet& ts, std::size_t r, double y);
std::vector<double> target_sample(const TargetSet& ts, std::size_t r,
                                  std::size_t n, Rng& rng);

}  // namespace ptx

#endif  // PTX_TARGET_HPP_
