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

#include "ptx/target.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptx/logspace.hpp"

namespace ptx {
namespace {

constexpr std::size_t kCheckDraws = 2000;
constexpr std::uint64_t kCheckSeed = 0x7a49e7;

}  // namespace

Support Support::real_line() { return Support{}; }

Support Support::positive_half_line() {
  Support s;
  s.kind = SupportKind::kPositiveHalfLine;
  return s;
}

Support Support::bounded(double upper, std::vector<double> atoms) {
  Support s;
  s.kind = SupportKind::kBounded;
  s.upper = upper;
  s.atoms = std::move(atoms);
  s.validate();
  return s;
}

bool Support::contains(double y) const {
  switch (kind) {
    case SupportKind::kRealLine:
      return std::isfinite(y);
    case SupportKind::kPositiveHalfLine:
      return y > 0.0 && std::isfinite(y);
    case SupportKind::kBounded:
      return y > 0.0 && y <= upper;
  }
  return false;
}

void Support::validate() const {
  if (kind == SupportKind::kBounded && !(upper > 0.0 && std::isfinite(upper))) {
    throw std::invalid_argument("support: bounded upper limit must be > 0");
  }
  for (double a : atoms) {
    bool ok = kind == SupportKind::kRealLine ? std::isfinite(a)
              : kind == SupportKind::kPositiveHalfLine
                  ? a >= 0.0 && std::isfinite(a)
                  : a >= 0.0 && a <= upper;
    if (!ok) throw std::invalid_argument("support: atom outside the support");
  }
}

TargetSpec::TargetSpec(MixtureSpec dist, Support support, std::string label)
    : dist_(std::move(dist)), support_(std::move(support)),
      label_(std::move(label)) {
  support_.validate();
  check_draws();
}

TargetSpec TargetSpec::from_cdf(std::function<double(double)> cdf,
                                std::function<double(double)> density,
                                std::function<double(Rng&)> sampler,
                                Support support, std::vector<Atom> atoms,
                                std::string label) {
  if (!cdf || !density || !sampler) {
    throw std::invalid_argument("target: cdf, density and sampler required");
  }
  TargetSpec t;
  t.cdf_ = std::move(cdf);
  t.density_ = std::move(density);
  t.sampler_ = std::move(sampler);
  t.atoms_ = std::move(atoms);
  t.support_ = std::move(support);
  t.label_ = std::move(label);
  t.support_.validate();
  t.check_draws();
  return t;
}

void TargetSpec::check_draws() const {
  Rng rng(kCheckSeed);
  for (std::size_t i = 0; i < kCheckDraws; ++i) {
    double y = draw(rng);
    if (!support_.contains(y)) {
      throw std::invalid_argument("target '" + label_ +
                                  "': draw outside the declared support");
    }
  }
}

double TargetSpec::log_cdf(double y) const {
  if (dist_) return ptx::log_cdf(*dist_, y);
  double f = std::clamp(cdf_(y), 0.0, 1.0);
  return f > 0.0 ? std::log(f) : kNegInf;
}

double TargetSpec::log_continuous_density(double y) const {
  if (dist_) return ptx::log_continuous_density(*dist_, y);
  double f = density_(y);
  return f > 0.0 ? std::log(f) : kNegInf;
}

double TargetSpec::log_atom_mass(double y) const {
  if (dist_) return ptx::log_atom_mass(*dist_, y);
  for (const auto& a : atoms_) {
    if (a.location == y) return std::log(a.weight);
  }
  return kNegInf;
}

double TargetSpec::log_density(double y) const {
  double m = log_atom_mass(y);
  return m > kNegInf ? m : log_continuous_density(y);
}

double TargetSpec::draw(Rng& rng) const {
  return dist_ ? ptx::draw(*dist_, rng) : sampler_(rng);
}

std::vector<double> TargetSpec::sample(std::size_t n, Rng& rng) const {
  std::vector<double> out(n);
  for (auto& y : out) y = draw(rng);
  return out;
}

TargetSet::TargetSet(std::vector<CovariateRow> rows,
                     std::vector<TargetSpec> targets)
    : rows_(std::move(rows)), targets_(std::move(targets)) {
  if (targets_.empty()) throw std::invalid_argument("target set: R must be >= 1");
  if (rows_.size() != targets_.size()) {
    throw std::invalid_argument("target set: one target per covariate row");
  }
  for (const auto& r : rows_) {
    if (r.values.size() != rows_.front().values.size()) {
      throw std::invalid_argument("target set: rows differ in dimension");
    }
  }
}

TargetSet::TargetSet(TargetSpec target)
    : TargetSet({CovariateRow{}}, {std::move(target)}) {}

double target_log_cdf(const TargetSet& ts, std::size_t r, double y) {
  if (r >= ts.size()) throw std::out_of_range("target row out of range");
  return ts.target(r).log_cdf(y);
}

std::vector<double> target_sample(const TargetSet& ts, std::size_t r,
                                  std::size_t n, Rng& rng) {
  if (r >= ts.size()) throw std::out_of_range("target row out of range");
  return ts.target(r).sample(n, rng);
}

}  // namespace ptx
