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

#include "ptx/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/inverse_gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "ptx/logspace.hpp"
#include "ptx/special.hpp"

namespace ptx {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void require(bool ok, Family f, const char* what) {
  if (!ok) {
    throw std::invalid_argument(std::string(family_name(f)) + ": " + what);
  }
}

double quantile(const DistSpec& d, double p) {
  const auto& q = d.params();
  switch (d.family()) {
    case Family::kNormal:
      return boost::math::quantile(boost::math::normal(q[0], q[1]), p);
    case Family::kLogNormal:
      return boost::math::quantile(boost::math::lognormal(q[0], q[1]), p);
    case Family::kGamma:
      return boost::math::quantile(
          boost::math::gamma_distribution<>(q[0], 1.0 / q[1]), p);
    case Family::kBeta:
      return q[2] * boost::math::quantile(boost::math::beta_distribution<>(q[0], q[1]), p);
    case Family::kStudentT:
      return q[1] + q[2] * boost::math::quantile(boost::math::students_t(q[0]), p);
    case Family::kExponentialShifted:
      return q[1] - std::log1p(-p) / q[0];
    case Family::kInverseGamma:
      return boost::math::quantile(
          boost::math::inverse_gamma_distribution<>(q[0], q[1]), p);
    case Family::kLaplace:
      return p < 0.5 ? q[0] + q[1] * std::log(2.0 * p)
                     : q[0] - q[1] * std::log(2.0 * (1.0 - p));
    case Family::kHalfCauchy:
      return q[0] * std::tan(0.5 * kPi * p);
    case Family::kWeibullPH:
      return std::exp((std::log(-std::log1p(-p)) - q[1]) / q[0]);
    case Family::kDirichlet:
      break;
  }
  throw std::domain_error("dirichlet: no univariate quantile");
}

double draw_untruncated(const DistSpec& d, Rng& rng) {
  const auto& q = d.params();
  switch (d.family()) {
    case Family::kNormal:
      return q[0] + q[1] * rng.normal();
    case Family::kLogNormal:
      return std::exp(q[0] + q[1] * rng.normal());
    case Family::kGamma:
      return rng.gamma(q[0], q[1]);
    case Family::kBeta: {
      double la = rng.log_gamma_variate(q[0]);
      double lb = rng.log_gamma_variate(q[1]);
      double y = q[2] / (1.0 + std::exp(lb - la));
      if (y >= q[2]) y = std::nextafter(q[2], 0.0);
      if (y <= 0.0) y = std::numeric_limits<double>::denorm_min();
      return y;
    }
    case Family::kStudentT: {
      double z = rng.normal();
      double chi2 = 2.0 * rng.gamma(0.5 * q[0], 1.0);
      return q[1] + q[2] * z / std::sqrt(chi2 / q[0]);
    }
    case Family::kExponentialShifted:
      return q[1] + rng.exponential() / q[0];
    case Family::kInverseGamma:
      return std::exp(std::log(q[1]) - rng.log_gamma_variate(q[0]));
    case Family::kLaplace:
      return q[0] + q[1] * (rng.exponential() - rng.exponential());
    case Family::kHalfCauchy:
      return q[0] * std::tan(0.5 * kPi * rng.uniform());
    case Family::kWeibullPH:
      return std::exp((std::log(rng.exponential()) - q[1]) / q[0]);
    case Family::kDirichlet:
      break;
  }
  throw std::domain_error("dirichlet: use sample_dirichlet");
}

double log_cdf_untruncated(const DistSpec& d, double y) {
  const auto& q = d.params();
  if (std::isnan(y)) return y;
  switch (d.family()) {
    case Family::kNormal:
      return special::log_normal_cdf((y - q[0]) / q[1]);
    case Family::kLogNormal:
      if (y <= 0.0) return kNegInf;
      return special::log_normal_cdf((std::log(y) - q[0]) / q[1]);
    case Family::kGamma:
      return special::log_gamma_p(q[0], q[1] * y);
    case Family::kBeta:
      return special::log_ibeta(q[0], q[1], y / q[2]);
    case Family::kStudentT: {
      double t = (y - q[1]) / q[2];
      if (std::isinf(t)) return t > 0 ? 0.0 : kNegInf;
      double x = q[0] / (q[0] + t * t);
      if (t <= 0.0) {
        return std::log(0.5) + special::log_ibeta(0.5 * q[0], 0.5, x);
      }
      return std::log1p(-0.5 * boost::math::ibeta(0.5 * q[0], 0.5, x));
    }
    case Family::kExponentialShifted: {
      double x = y - q[1];
      if (x <= 0.0) return kNegInf;
      return log1mexp(q[0] * x);
    }
    case Family::kInverseGamma:
      if (y <= 0.0) return kNegInf;
      return special::log_gamma_q(q[0], q[1] / y);
    case Family::kLaplace: {
      double z = (y - q[0]) / q[1];
      if (z < 0.0) return std::log(0.5) + z;
      return std::log1p(-0.5 * std::exp(-z));
    }
    case Family::kHalfCauchy:
      if (y <= 0.0) return kNegInf;
      if (y > q[0]) return std::log1p(-2.0 / kPi * std::atan(q[0] / y));
      return std::log(2.0 / kPi * std::atan(y / q[0]));
    case Family::kWeibullPH:
      if (y <= 0.0) return kNegInf;
      if (std::isinf(y)) return 0.0;
      return log1mexp(std::exp(q[0] * std::log(y) + q[1]));
    case Family::kDirichlet:
      break;
  }
  throw std::domain_error("dirichlet: no univariate log_cdf");
}

double log_density_untruncated(const DistSpec& d, double y) {
  const auto& q = d.params();
  if (std::isnan(y)) return y;
  switch (d.family()) {
    case Family::kNormal: {
      double z = (y - q[0]) / q[1];
      return -0.5 * z * z - std::log(q[1]) - 0.5 * std::log(2.0 * kPi);
    }
    case Family::kLogNormal: {
      if (y <= 0.0) return kNegInf;
      double ly = std::log(y);
      double z = (ly - q[0]) / q[1];
      return -0.5 * z * z - std::log(q[1]) - ly - 0.5 * std::log(2.0 * kPi);
    }
    case Family::kGamma:
      if (y <= 0.0 || std::isinf(y)) return kNegInf;
      return d.log_norm() + (q[0] - 1.0) * std::log(y) - q[1] * y;
    case Family::kBeta: {
      double x = y / q[2];
      if (x <= 0.0 || x >= 1.0) return kNegInf;
      return (q[0] - 1.0) * std::log(x) + (q[1] - 1.0) * std::log1p(-x) +
             d.log_norm();
    }
    case Family::kStudentT: {
      double nu = q[0];
      double z = (y - q[1]) / q[2];
      return d.log_norm() - 0.5 * (nu + 1.0) * std::log1p(z * z / nu);
    }
    case Family::kExponentialShifted: {
      double x = y - q[1];
      if (x < 0.0) return kNegInf;
      return std::log(q[0]) - q[0] * x;
    }
    case Family::kInverseGamma:
      if (y <= 0.0) return kNegInf;
      return d.log_norm() - (q[0] + 1.0) * std::log(y) - q[1] / y;
    case Family::kLaplace:
      return -std::log(2.0 * q[1]) - std::fabs(y - q[0]) / q[1];
    case Family::kHalfCauchy: {
      if (y < 0.0) return kNegInf;
      double z = y / q[0];
      return std::log(2.0 / (kPi * q[0])) - std::log1p(z * z);
    }
    case Family::kWeibullPH: {
      if (y <= 0.0 || std::isinf(y)) return kNegInf;
      double ly = std::log(y);
      double h = q[0] * ly + q[1];
      return std::log(q[0]) + h - ly - std::exp(h);
    }
    case Family::kDirichlet:
      break;
  }
  throw std::domain_error("dirichlet: no univariate log_density");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kNormal: return "normal";
    case Family::kLogNormal: return "lognormal";
    case Family::kGamma: return "gamma";
    case Family::kBeta: return "beta";
    case Family::kStudentT: return "student_t";
    case Family::kExponentialShifted: return "exponential_shifted";
    case Family::kInverseGamma: return "inverse_gamma";
    case Family::kLaplace: return "laplace";
    case Family::kHalfCauchy: return "half_cauchy";
    case Family::kDirichlet: return "dirichlet";
    case Family::kWeibullPH: return "weibull_ph";
  }
  return "unknown";
}

DistSpec::DistSpec(Family f, std::vector<double> params)
    : family_(f), params_(std::move(params)) {
  for (double v : params_) require(std::isfinite(v), f, "non-finite parameter");
  const auto& q = params_;
  switch (f) {
    case Family::kNormal:
    case Family::kLogNormal:
    case Family::kLaplace:
      require(q[1] > 0.0, f, "scale must be > 0");
      break;
    case Family::kGamma:
    case Family::kInverseGamma:
      require(q[0] > 0.0 && q[1] > 0.0, f, "shape and rate/scale must be > 0");
      break;
    case Family::kBeta:
      require(q[0] > 0.0 && q[1] > 0.0, f, "shapes must be > 0");
      require(q[2] > 0.0, f, "upper must be > 0");
      break;
    case Family::kStudentT:
      require(q[0] > 0.0 && q[2] > 0.0, f, "dof and scale must be > 0");
      break;
    case Family::kExponentialShifted:
      require(q[0] > 0.0, f, "rate must be > 0");
      break;
    case Family::kHalfCauchy:
      require(q[0] > 0.0, f, "scale must be > 0");
      break;
    case Family::kDirichlet:
      require(!q.empty(), f, "needs at least one concentration");
      for (double a : q) require(a > 0.0, f, "concentrations must be > 0");
      break;
    case Family::kWeibullPH:
      require(q[0] > 0.0, f, "shape must be > 0");
      break;
  }
  switch (f) {
    case Family::kGamma:
    case Family::kInverseGamma:
      log_norm_ = q[0] * std::log(q[1]) - special::lgamma(q[0]);
      break;
    case Family::kBeta:
      log_norm_ = -special::lbeta(q[0], q[1]) - std::log(q[2]);
      break;
    case Family::kStudentT:
      log_norm_ = special::lgamma(0.5 * (q[0] + 1.0)) -
                  special::lgamma(0.5 * q[0]) - 0.5 * std::log(q[0] * kPi) -
                  std::log(q[2]);
      break;
    default:
      break;
  }
}

DistSpec DistSpec::normal(double mean, double sd) {
  return DistSpec(Family::kNormal, {mean, sd});
}
DistSpec DistSpec::lognormal(double meanlog, double sdlog) {
  return DistSpec(Family::kLogNormal, {meanlog, sdlog});
}
DistSpec DistSpec::gamma(double shape, double rate) {
  return DistSpec(Family::kGamma, {shape, rate});
}
DistSpec DistSpec::beta(double a, double b, double upper) {
  return DistSpec(Family::kBeta, {a, b, upper});
}
DistSpec DistSpec::student_t(double dof, double location, double scale) {
  return DistSpec(Family::kStudentT, {dof, location, scale});
}
DistSpec DistSpec::exponential_shifted(double rate, double shift) {
  return DistSpec(Family::kExponentialShifted, {rate, shift});
}
DistSpec DistSpec::inverse_gamma(double shape, double scale) {
  return DistSpec(Family::kInverseGamma, {shape, scale});
}
DistSpec DistSpec::laplace(double location, double scale) {
  return DistSpec(Family::kLaplace, {location, scale});
}
DistSpec DistSpec::half_cauchy(double scale) {
  return DistSpec(Family::kHalfCauchy, {scale});
}
DistSpec DistSpec::dirichlet(std::vector<double> concentration) {
  return DistSpec(Family::kDirichlet, std::move(concentration));
}
DistSpec DistSpec::weibull_ph(double shape, double log_rate) {
  return DistSpec(Family::kWeibullPH, {shape, log_rate});
}

DistSpec DistSpec::from_name(std::string_view name, std::vector<double> p) {
  auto need = [&](std::size_t n) {
    if (p.size() != n) {
      throw std::invalid_argument(std::string(name) + ": expected " +
                                  std::to_string(n) + " parameters, got " +
                                  std::to_string(p.size()));
    }
  };
  if (name == "normal") { need(2); return normal(p[0], p[1]); }
  if (name == "lognormal") { need(2); return lognormal(p[0], p[1]); }
  if (name == "gamma") { need(2); return gamma(p[0], p[1]); }
  if (name == "beta") {
    if (p.size() == 2) p.push_back(1.0);
    need(3);
    return beta(p[0], p[1], p[2]);
  }
  if (name == "student_t") { need(3); return student_t(p[0], p[1], p[2]); }
  if (name == "exponential_shifted") {
    need(2);
    return exponential_shifted(p[0], p[1]);
  }
  if (name == "inverse_gamma") { need(2); return inverse_gamma(p[0], p[1]); }
  if (name == "laplace") { need(2); return laplace(p[0], p[1]); }
  if (name == "half_cauchy") { need(1); return half_cauchy(p[0]); }
  if (name == "dirichlet") return dirichlet(std::move(p));
  if (name == "weibull_ph") { need(2); return weibull_ph(p[0], p[1]); }
  throw std::invalid_argument(
      "unknown family '" + std::string(name) +
      "' (allowed: normal, lognormal, gamma, beta, student_t, "
      "exponential_shifted, inverse_gamma, laplace, half_cauchy, dirichlet, "
      "weibull_ph)");
}

DistSpec DistSpec::truncated_above(double upper) const {
  if (!univariate()) throw std::domain_error("dirichlet: cannot truncate");
  DistSpec out = *this;
  out.trunc_ = std::min(trunc_, upper);
  out.log_trunc_mass_ = log_cdf_untruncated(out, out.trunc_);
  if (!std::isfinite(out.log_trunc_mass_)) {
    throw std::invalid_argument(std::string(name()) +
                                ": truncation point leaves no mass");
  }
  return out;
}

double DistSpec::mean() const {
  if (truncated()) throw std::logic_error("mean of a truncated distribution");
  const auto& q = params_;
  switch (family_) {
    case Family::kNormal: return q[0];
    case Family::kLogNormal: return std::exp(q[0] + 0.5 * q[1] * q[1]);
    case Family::kGamma: return q[0] / q[1];
    case Family::kBeta: return q[2] * q[0] / (q[0] + q[1]);
    case Family::kStudentT: return q[0] > 1.0 ? q[1] : std::nan("");
    case Family::kExponentialShifted: return q[1] + 1.0 / q[0];
    case Family::kInverseGamma: return q[0] > 1.0 ? q[1] / (q[0] - 1.0) : kInf;
    case Family::kLaplace: return q[0];
    case Family::kHalfCauchy: return kInf;
    case Family::kWeibullPH: {
      double scale = std::exp(-q[1] / q[0]);
      return scale * std::tgamma(1.0 + 1.0 / q[0]);
    }
    case Family::kDirichlet: break;
  }
  throw std::domain_error("dirichlet: no univariate mean");
}

double DistSpec::variance() const {
  if (truncated()) {
    throw std::logic_error("variance of a truncated distribution");
  }
  const auto& q = params_;
  switch (family_) {
    case Family::kNormal: return q[1] * q[1];
    case Family::kLogNormal: {
      double s2 = q[1] * q[1];
      return std::expm1(s2) * std::exp(2.0 * q[0] + s2);
    }
    case Family::kGamma: return q[0] / (q[1] * q[1]);
    case Family::kBeta: {
      double s = q[0] + q[1];
      return q[2] * q[2] * q[0] * q[1] / (s * s * (s + 1.0));
    }
    case Family::kStudentT:
      return q[0] > 2.0 ? q[2] * q[2] * q[0] / (q[0] - 2.0) : kInf;
    case Family::kExponentialShifted: return 1.0 / (q[0] * q[0]);
    case Family::kInverseGamma:
      if (q[0] <= 2.0) return kInf;
      return q[1] * q[1] / ((q[0] - 1.0) * (q[0] - 1.0) * (q[0] - 2.0));
    case Family::kLaplace: return 2.0 * q[1] * q[1];
    case Family::kHalfCauchy: return kInf;
    case Family::kWeibullPH: {
      double scale = std::exp(-q[1] / q[0]);
      double g1 = std::tgamma(1.0 + 1.0 / q[0]);
      return scale * scale * (std::tgamma(1.0 + 2.0 / q[0]) - g1 * g1);
    }
    case Family::kDirichlet: break;
  }
  throw std::domain_error("dirichlet: no univariate variance");
}

MixtureSpec::MixtureSpec(std::vector<MixtureComponent> components,
                         std::vector<Atom> atoms)
    : components_(std::move(components)), atoms_(std::move(atoms)) {
  if (components_.empty() && atoms_.empty()) {
    throw std::invalid_argument("mixture: no components or atoms");
  }
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight >= 0.0)) {
      throw std::invalid_argument("mixture: negative component weight");
    }
    if (!c.dist.univariate()) {
      throw std::invalid_argument("mixture: components must be univariate");
    }
    total += c.weight;
    cumulative_.push_back(total);
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(atoms_[i].weight >= 0.0) || !std::isfinite(atoms_[i].location)) {
      throw std::invalid_argument("mixture: invalid atom");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (atoms_[j].location == atoms_[i].location) {
        throw std::invalid_argument("mixture: duplicate atom location");
      }
    }
    total += atoms_[i].weight;
    cumulative_.push_back(total);
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture: weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
}

MixtureSpec MixtureSpec::single(DistSpec d) {
  return MixtureSpec({MixtureComponent{1.0, std::move(d)}});
}

double MixtureSpec::mean() const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * c.dist.mean();
  for (const auto& a : atoms_) m += a.weight * a.location;
  return m;
}

double draw(const DistSpec& d, Rng& rng) {
  if (!d.truncated()) return draw_untruncated(d, rng);
  // Rejection while the kept mass is large; inversion otherwise.
  if (d.log_truncation_mass() > std::log(0.25)) {
    for (int i = 0; i < 200; ++i) {
      double y = draw_untruncated(d, rng);
      if (y <= d.truncation()) return y;
    }
  }
  double p = rng.uniform() * std::exp(d.log_truncation_mass());
  return std::min(quantile(d, p), d.truncation());
}

double draw(const MixtureSpec& m, Rng& rng) {
  std::size_t nc = m.components_.size();
  if (nc == 1 && m.atoms_.empty()) return draw(m.components_[0].dist, rng);
  double u = rng.uniform() * m.cumulative_.back();
  std::size_t k = std::upper_bound(m.cumulative_.begin(), m.cumulative_.end(), u) -
                  m.cumulative_.begin();
  k = std::min(k, m.cumulative_.size() - 1);
  if (k < nc) return draw(m.components_[k].dist, rng);
  return m.atoms_[k - nc].location;
}

std::vector<double> sample(const DistSpec& d, std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  for (auto& y : out) y = draw(d, rng);
  return out;
}

std::vector<double> sample(const MixtureSpec& m, std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  for (auto& y : out) y = draw(m, rng);
  return out;
}

std::vector<double> sample_dirichlet(std::span<const double> alpha, Rng& rng) {
  std::vector<double> lg(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    lg[i] = rng.log_gamma_variate(alpha[i]);
  }
  double lse = log_sum_exp(lg);
  for (auto& v : lg) v = std::exp(v - lse);
  return lg;
}

double log_cdf(const DistSpec& d, double y) {
  if (!d.truncated()) return log_cdf_untruncated(d, y);
  if (y >= d.truncation()) return 0.0;
  return std::min(0.0, log_cdf_untruncated(d, y) - d.log_truncation_mass());
}

double log_cdf(const MixtureSpec& m, double y) {
  double acc = kNegInf;
  bool complete = true;
  for (const auto& c : m.components()) {
    if (c.weight > 0.0) {
      double l = log_cdf(c.dist, y);
      complete = complete && l == 0.0;
      acc = log_add_exp(acc, std::log(c.weight) + l);
    }
  }
  for (const auto& a : m.atoms()) {
    if (a.weight > 0.0) {
      if (a.location <= y) {
        acc = log_add_exp(acc, std::log(a.weight));
      } else {
        complete = false;
      }
    }
  }
  // All mass at or below y; avoid rounding in the weight sum.
  if (complete) return 0.0;
  return std::min(acc, 0.0);
}

double log_density(const DistSpec& d, double y) {
  if (!d.truncated()) return log_density_untruncated(d, y);
  if (y > d.truncation()) return kNegInf;
  return log_density_untruncated(d, y) - d.log_truncation_mass();
}

double log_continuous_density(const MixtureSpec& m, double y) {
  double acc = kNegInf;
  for (const auto& c : m.components()) {
    if (c.weight > 0.0) {
      acc = log_add_exp(acc, std::log(c.weight) + log_density(c.dist, y));
    }
  }
  return acc;
}

double log_atom_mass(const MixtureSpec& m, double y) {
  for (const auto& a : m.atoms()) {
    if (a.location == y) return std::log(a.weight);
  }
  return kNegInf;
}

double log_density(const MixtureSpec& m, double y) {
  for (const auto& a : m.atoms()) {
    if (a.location == y) return std::log(a.weight);
  }
  return log_continuous_density(m, y);
}

Eigen::MatrixXd lkj_partial_to_cholesky(std::span<const double> omega,
                                        int dim) {
  if (dim < 1 || static_cast<int>(omega.size()) != lkj_size(dim)) {
    throw std::invalid_argument("lkj: expected dim*(dim-1)/2 partial correlations");
  }
  for (double w : omega) {
    if (!(w >= -1.0 && w <= 1.0)) {
      throw std::domain_error("lkj: partial correlation outside [-1, 1]");
    }
  }
  // z(i, j) for i > j, column by column.
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(dim, dim);
  std::size_t pos = 0;
  for (int j = 0; j < dim; ++j) {
    for (int i = j + 1; i < dim; ++i) z(i, j) = omega[pos++];
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  L(0, 0) = 1.0;
  for (int i = 1; i < dim; ++i) {
    double remaining = 1.0;
    for (int j = 0; j < i; ++j) {
      L(i, j) = z(i, j) * std::sqrt(remaining);
      remaining = std::max(0.0, remaining - L(i, j) * L(i, j));
    }
    L(i, i) = std::sqrt(remaining);
  }
  return L;
}

Eigen::MatrixXd lkj_corr_cholesky_rng(int dim, double eta, Rng& rng) {
  if (!(eta > 0.0)) throw std::invalid_argument("lkj: eta must be > 0");
  std::vector<double> cpc;
  cpc.reserve(lkj_size(dim));
  double alpha = eta + 0.5 * (dim - 1);
  for (int j = 0; j < dim - 1; ++j) {
    alpha -= 0.5;
    for (int i = j + 1; i < dim; ++i) {
      cpc.push_back(2.0 * draw(DistSpec::beta(alpha, alpha), rng) - 1.0);
    }
  }
  return lkj_partial_to_cholesky(cpc, dim);
}

MvSkewNormal::MvSkewNormal(const Eigen::MatrixXd& scale,
                           const Eigen::VectorXd& slant) {
  if (scale.rows() != scale.cols() || scale.rows() != slant.size()) {
    throw std::invalid_argument("skew-normal: dimension mismatch");
  }
  omega_ = scale.diagonal().cwiseSqrt();
  if (!(omega_.array() > 0.0).all() || !omega_.allFinite()) {
    throw std::domain_error("skew-normal: scale matrix not positive definite");
  }
  Eigen::MatrixXd corr =
      omega_.cwiseInverse().asDiagonal() * scale * omega_.cwiseInverse().asDiagonal();
  Eigen::VectorXd ce = corr * slant;
  delta_ = ce / std::sqrt(1.0 + slant.dot(ce));
  Eigen::MatrixXd cond = corr - delta_ * delta_.transpose();
  Eigen::LLT<Eigen::MatrixXd> llt(cond);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("skew-normal: scale matrix not positive definite");
  }
  chol_ = llt.matrixL();
}

void MvSkewNormal::draw(Rng& rng, Eigen::Ref<Eigen::VectorXd> out) const {
  const int k = dim();
  double x0 = rng.normal();
  Eigen::VectorXd u(k);
  for (int i = 0; i < k; ++i) u(i) = rng.normal();
  Eigen::VectorXd x = delta_ * x0 + chol_.triangularView<Eigen::Lower>() * u;
  if (x0 < 0.0) x = -x;
  out = omega_.cwiseProduct(x);
}

Eigen::VectorXd MvSkewNormal::marginal_sd() const {
  return omega_.cwiseProduct(
      (1.0 - 2.0 / kPi * delta_.array().square()).sqrt().matrix());
}

Eigen::MatrixXd sample_mv_skew_normal(const Eigen::MatrixXd& scale,
                                      const Eigen::VectorXd& slant,
                                      std::size_t n, Rng& rng) {
  MvSkewNormal sn(scale, slant);
  Eigen::MatrixXd out(n, sn.dim());
  Eigen::VectorXd row(sn.dim());
  for (std::size_t i = 0; i < n; ++i) {
    sn.draw(rng, row);
    out.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return out;
}

}  // namespace ptx
