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

#include "ptx/importance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "ptx/logspace.hpp"

namespace ptx {
namespace {

constexpr double kStudentDof = 5.0;
constexpr double kMinOmega = 1e-6;
constexpr double kMaxOmega = 1e5;
constexpr double kMinBetaShape = 1e-2;
// The atom keeps mass 0.05; the two Beta components share the rest equally.
constexpr double kAtomWeight = 0.05;
constexpr double kBetaWeight = (1.0 - kAtomWeight) / 2.0;

double widened(double v, double c, std::vector<std::string>& diag,
               const char* which) {
  double w = c * c * v;
  if (!(w > 0.0)) {
    diag.push_back(std::string("degenerate ") + which +
                   " variance; using minimum spread");
    return kMinOmega;
  }
  return w;
}

std::optional<DistSpec> gamma_component(const Moments& m, double c,
                                        std::vector<std::string>& diag,
                                        const char* which) {
  if (!(m.mean > 0.0)) {
    diag.push_back(std::string("non-positive ") + which +
                   " mean on the half line; component dropped");
    return std::nullopt;
  }
  double w = std::min(widened(m.variance, c, diag, which), kMaxOmega);
  return DistSpec::gamma(m.mean * m.mean / w, m.mean / w);
}

DistSpec beta_component(const Moments& m, double c, double a,
                        std::vector<std::string>& diag, const char* which) {
  double mu = m.mean / a;
  if (!(m.variance > 0.0)) {
    diag.push_back(std::string("degenerate ") + which +
                   " variance; using minimum spread");
  }
  double w = std::max(c * c * m.variance / (a * a), kMinOmega);
  double sa = mu * (mu * (1.0 - mu) / w - 1.0);
  double sb = (1.0 - mu) / mu * sa;
  if (!(sa > 0.0) || !(sb > 0.0)) {
    diag.push_back(std::string("beta shapes for ") + which +
                   " not positive; clamped");
    sa = std::max(sa, kMinBetaShape);
    sb = std::max(sb, kMinBetaShape);
    if (!std::isfinite(sa)) sa = kMinBetaShape;
    if (!std::isfinite(sb)) sb = kMinBetaShape;
  }
  return DistSpec::beta(sa, sb, a);
}

}  // namespace

Moments sample_moments(std::span<const double> y) {
  if (y.empty()) throw std::invalid_argument("moments: empty sample");
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double ss = 0.0;
  for (double v : y) ss += (v - mean) * (v - mean);
  double var = y.size() > 1 ? ss / static_cast<double>(y.size() - 1) : 0.0;
  return {mean, var};
}

ImportanceProposal select_proposal(const Support& support,
                                   std::span<const double> samples_p,
                                   std::span<const double> samples_t,
                                   double c) {
  if (samples_p.empty() || samples_t.empty()) {
    throw std::invalid_argument("proposal: empty sample set");
  }
  if (!(c >= 1.0)) throw std::invalid_argument("proposal: widening must be >= 1");
  Moments mp = sample_moments(samples_p);
  Moments mt = sample_moments(samples_t);
  std::vector<std::string> diag;

  auto build = [&]() -> MixtureSpec {
    switch (support.kind) {
      case SupportKind::kRealLine: {
        double sp = std::sqrt(widened(mp.variance, c, diag, "predictive"));
        double st = std::sqrt(widened(mt.variance, c, diag, "target"));
        return MixtureSpec({{0.5, DistSpec::student_t(kStudentDof, mp.mean, sp)},
                            {0.5, DistSpec::student_t(kStudentDof, mt.mean, st)}});
      }
      case SupportKind::kPositiveHalfLine: {
        auto gp = gamma_component(mp, c, diag, "predictive");
        auto gt = gamma_component(mt, c, diag, "target");
        if (!gp && !gt) {
          throw std::domain_error("proposal: no positive sample mean on the half line");
        }
        if (!gp) gp = gt;
        if (!gt) gt = gp;
        return MixtureSpec({{0.5, *gp}, {0.5, *gt}});
      }
      case SupportKind::kBounded: {
        double a = support.upper;
        return MixtureSpec(
            {{kBetaWeight, beta_component(mp, c, a, diag, "predictive")},
             {kBetaWeight, beta_component(mt, c, a, diag, "target")}},
            {{kAtomWeight, a}});
      }
    }
    throw std::logic_error("proposal: unknown support");
  };
  MixtureSpec mix = build();
  return ImportanceProposal{std::move(mix), support, c, mp, mt, std::move(diag)};
}

ImportanceProposal uniform_proposal(const Support& support) {
  if (support.kind != SupportKind::kBounded) {
    throw std::invalid_argument("uniform proposal needs a bounded support");
  }
  return ImportanceProposal{
      MixtureSpec::single(DistSpec::beta(1.0, 1.0, support.upper)),
      support, 1.0, {}, {}, {}};
}

double proposal_log_density(const ImportanceProposal& q, double y) {
  if (q.support.kind == SupportKind::kBounded && !q.support.contains(y)) {
    return kNegInf;
  }
  return log_density(q.mixture, y);
}

std::vector<double> sample_proposal(const ImportanceProposal& q, std::size_t n,
                                    Rng& rng) {
  return sample(q.mixture, n, rng);
}

}  // namespace ptx
