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

#include "ptx/models/r2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace ptx {
namespace {

void check_lambda(R2Prior kind, std::span<const double> lambda) {
  std::size_t want = kind == R2Prior::kHorseshoe ? 5 : 3;
  if (lambda.size() != want) {
    throw std::invalid_argument("r2: " + std::string(r2_prior_name(kind)) +
                                " lambda needs " + std::to_string(want) + " entries");
  }
  for (double v : lambda) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("r2: hyperparameters must be positive and finite");
    }
  }
}

// InvGamma(shape, scale) draw.
double inv_gamma(double shape, double scale, Rng& rng) {
  return scale * std::exp(-rng.log_gamma_variate(shape));
}

double half_cauchy(double scale, Rng& rng) {
  return scale * std::tan(0.5 * std::numbers::pi * rng.uniform());
}

double inv_gamma_sd(double shape, double scale) {
  if (!(shape > 2.0)) return std::numeric_limits<double>::quiet_NaN();
  return scale / ((shape - 1.0) * std::sqrt(shape - 2.0));
}

}  // namespace

std::string_view r2_prior_name(R2Prior kind) {
  switch (kind) {
    case R2Prior::kGaussian:
      return "gaussian";
    case R2Prior::kDirichletLaplace:
      return "dirichlet_laplace";
    case R2Prior::kHorseshoe:
      return "horseshoe";
  }
  return "unknown";
}

R2Prior r2_prior_from_name(std::string_view name) {
  if (name == "gaussian") return R2Prior::kGaussian;
  if (name == "dirichlet_laplace") return R2Prior::kDirichletLaplace;
  if (name == "horseshoe") return R2Prior::kHorseshoe;
  throw std::invalid_argument("r2: unknown prior '" + std::string(name) +
                              "' (allowed: gaussian, dirichlet_laplace, horseshoe)");
}

Eigen::MatrixXd simulate_r2_design(std::size_t n, std::size_t p, std::uint64_t seed) {
  if (n < 2 || p < 1) throw std::invalid_argument("r2: need n >= 2 and p >= 1");
  Rng rng(seed);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = rng.normal();
  }
  x.rowwise() -= x.colwise().mean();
  return x;
}

Bounds r2_bounds(R2Prior kind, std::size_t n, std::size_t p) {
  switch (kind) {
    case R2Prior::kGaussian:
      return Bounds({1.0, 2.0, 0.2}, {500.0, 500.0, 500.0}, {"gamma", "a1", "b1"});
    case R2Prior::kDirichletLaplace:
      return Bounds({1.0 / (3.0 * static_cast<double>(std::max(n, p))), 2.0, 0.2},
                    {0.5, 500.0, 500.0}, {"alpha", "a1", "b1"});
    case R2Prior::kHorseshoe:
      if (p < 3) throw std::invalid_argument("r2: horseshoe needs p >= 3");
      return Bounds({1.0, 1.0, 1e-5, 2.0, 0.2},
                    {0.5 * static_cast<double>(p), 80.0, 100.0, 500.0, 500.0},
                    {"p0", "nu", "s2", "a1", "b1"});
  }
  throw std::logic_error("r2: unknown prior");
}

R2Draws r2_draw(R2Prior kind, std::span<const double> lambda, std::size_t n,
                std::size_t p, std::size_t count, Rng& rng) {
  check_lambda(kind, lambda);
  const auto P = static_cast<Eigen::Index>(p);
  const auto S = static_cast<Eigen::Index>(count);
  const double a1 = lambda[lambda.size() - 2];
  const double b1 = lambda[lambda.size() - 1];
  R2Draws d;
  d.beta.resize(P, S);
  d.sigma2.resize(S);
  switch (kind) {
    case R2Prior::kGaussian: {
      const double gamma = lambda[0];
      for (Eigen::Index s = 0; s < S; ++s) {
        d.sigma2[s] = inv_gamma(a1, b1, rng);
        const double sd = std::sqrt(d.sigma2[s] / gamma);
        for (Eigen::Index j = 0; j < P; ++j) d.beta(j, s) = sd * rng.normal();
      }
      break;
    }
    case R2Prior::kDirichletLaplace: {
      const double alpha = lambda[0];
      const double k = static_cast<double>(p) * alpha;
      std::vector<double> conc(p, alpha);
      d.phi.resize(P, S);
      d.tau.resize(S);
      for (Eigen::Index s = 0; s < S; ++s) {
        d.sigma2[s] = inv_gamma(a1, b1, rng);
        std::vector<double> phi = sample_dirichlet(conc, rng);
        d.tau[s] = 2.0 * std::exp(rng.log_gamma_variate(k));
        const double scale = std::sqrt(d.sigma2[s]) * d.tau[s];
        for (Eigen::Index j = 0; j < P; ++j) {
          d.phi(j, s) = phi[static_cast<std::size_t>(j)];
          d.beta(j, s) = scale * d.phi(j, s) * (rng.exponential() - rng.exponential());
        }
      }
      break;
    }
    case R2Prior::kHorseshoe: {
      const double p0 = lambda[0];
      const double nu = lambda[1];
      const double s2 = lambda[2];
      const double ratio = p0 / (static_cast<double>(p) - p0);
      d.c2.resize(S);
      d.omega.resize(S);
      d.delta.resize(P, S);
      for (Eigen::Index s = 0; s < S; ++s) {
        d.sigma2[s] = inv_gamma(a1, b1, rng);
        d.c2[s] = inv_gamma(0.5 * nu, 0.5 * nu * s2, rng);
        d.omega[s] = half_cauchy(ratio * std::sqrt(d.sigma2[s] / static_cast<double>(n)), rng);
        const double w2 = d.omega[s] * d.omega[s];
        for (Eigen::Index j = 0; j < P; ++j) {
          const double delta = half_cauchy(1.0, rng);
          d.delta(j, s) = delta;
          // c2 delta^2 / (c2 + omega^2 delta^2), safe for huge delta.
          const double dt2 = d.c2[s] / (d.c2[s] / (delta * delta) + w2);
          d.beta(j, s) = d.omega[s] * std::sqrt(dt2) * rng.normal();
        }
      }
      break;
    }
  }
  return d;
}

double r2_value(double q, double sigma2) {
  if (!std::isfinite(q)) throw std::overflow_error("r2: |X beta|^2 overflowed");
  if (q <= 0.0) return 0.0;
  return std::min(q / (q + sigma2), std::nextafter(1.0, 0.0));
}

std::vector<double> r2_values(const Eigen::MatrixXd& x, const Eigen::MatrixXd& beta,
                              const Eigen::VectorXd& sigma2) {
  if (beta.rows() != x.cols() || beta.cols() != sigma2.size()) {
    throw std::invalid_argument("r2: shape mismatch");
  }
  Eigen::MatrixXd fitted = x * beta;
  Eigen::VectorXd q = fitted.colwise().squaredNorm().transpose() / static_cast<double>(x.rows());
  std::vector<double> out(static_cast<std::size_t>(q.size()));
  for (Eigen::Index s = 0; s < q.size(); ++s) out[static_cast<std::size_t>(s)] = r2_value(q[s], sigma2[s]);
  return out;
}

PredictiveSampler r2_predictive(R2Prior kind, const Eigen::MatrixXd& x) {
  auto shared = std::make_shared<const Eigen::MatrixXd>(x);
  return [kind, shared](std::span<const double> lambda, std::size_t row, std::size_t count,
                        Rng& rng) {
    if (row != 0) throw std::out_of_range("r2: single covariate row");
    const Eigen::MatrixXd& xm = *shared;
    R2Draws d = r2_draw(kind, lambda, static_cast<std::size_t>(xm.rows()),
                        static_cast<std::size_t>(xm.cols()), count, rng);
    return r2_values(xm, d.beta, d.sigma2);
  };
}

PriorModel r2_prior_model(R2Prior kind, std::size_t n, std::size_t p) {
  PriorModel m;
  for (std::size_t j = 0; j < p; ++j) m.names.push_back("beta_" + std::to_string(j + 1));
  m.names.push_back("sigma2");
  if (kind == R2Prior::kDirichletLaplace) {
    for (std::size_t j = 0; j < p; ++j) m.names.push_back("phi_" + std::to_string(j + 1));
    m.names.push_back("tau");
  } else if (kind == R2Prior::kHorseshoe) {
    m.names.push_back("c2");
    m.names.push_back("omega");
    for (std::size_t j = 0; j < p; ++j) m.names.push_back("delta_" + std::to_string(j + 1));
  }
  const auto q = static_cast<Eigen::Index>(m.names.size());
  const auto P = static_cast<Eigen::Index>(p);
  m.sampler = [kind, n, p, q, P](std::span<const double> lambda, std::size_t count, Rng& rng) {
    R2Draws d = r2_draw(kind, lambda, n, p, count, rng);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(count), q);
    out.leftCols(P) = d.beta.transpose();
    out.col(P) = d.sigma2;
    if (kind == R2Prior::kDirichletLaplace) {
      out.middleCols(P + 1, P) = d.phi.transpose();
      out.col(2 * P + 1) = d.tau;
    } else if (kind == R2Prior::kHorseshoe) {
      out.col(P + 1) = d.c2;
      out.col(P + 2) = d.omega;
      out.rightCols(P) = d.delta.transpose();
    }
    return out;
  };
  m.analytic_sd = [kind, p, q](std::span<const double> lambda) {
    check_lambda(kind, lambda);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> sd(static_cast<std::size_t>(q), nan);
    const double a1 = lambda[lambda.size() - 2];
    const double b1 = lambda[lambda.size() - 1];
    const double mean_sigma2 = b1 / (a1 - 1.0);
    sd[p] = inv_gamma_sd(a1, b1);
    const double dp = static_cast<double>(p);
    if (kind == R2Prior::kGaussian) {
      std::fill_n(sd.begin(), p, std::sqrt(mean_sigma2 / lambda[0]));
    } else if (kind == R2Prior::kDirichletLaplace) {
      const double a = lambda[0];
      const double k = dp * a;
      const double e_phi2 = a * (a + 1.0) / (k * (k + 1.0));
      const double e_tau2 = 4.0 * k * (k + 1.0);
      std::fill_n(sd.begin(), p, std::sqrt(2.0 * mean_sigma2 * e_phi2 * e_tau2));
      std::fill_n(sd.begin() + static_cast<std::ptrdiff_t>(p + 1), p,
                  std::sqrt(a * (k - a) / (k * k * (k + 1.0))));
      sd[2 * p + 1] = 2.0 * std::sqrt(k);
    } else {
      const double nu = lambda[1];
      sd[p + 1] = inv_gamma_sd(0.5 * nu, 0.5 * nu * lambda[2]);
    }
    return sd;
  };
  return m;
}

SecondaryConfig r2_secondary(R2Prior kind, std::size_t p) {
  SecondaryConfig c;
  if (kind == R2Prior::kHorseshoe) {
    c.sources.assign(2 * p + 3, SdSource::kRobust);
    c.sources[p] = SdSource::kAnalyticOrRobust;
    c.sources[p + 1] = SdSource::kAnalyticOrRobust;
  } else {
    std::size_t q = kind == R2Prior::kGaussian ? p + 1 : 2 * p + 2;
    c.sources.assign(q, SdSource::kAnalytic);
    c.sources[p] = SdSource::kAnalyticOrRobust;
  }
  return c;
}

std::vector<double> r2_target_shapes() {
  std::vector<double> s(4);
  for (int i = 0; i < 4; ++i) s[i] = std::exp(std::log(3.0) * (2.0 * i / 3.0 - 1.0));
  s[0] = 1.0 / 3.0;
  s[3] = 3.0;
  return s;
}

TargetSpec r2_beta_target(double s1, double s2) {
  std::string label = "beta(" + std::to_string(s1) + "," + std::to_string(s2) + ")";
  return TargetSpec(MixtureSpec::single(DistSpec::beta(s1, s2)), Support::bounded(1.0),
                    label);
}

std::vector<TargetSpec> r2_target_grid() {
  std::vector<TargetSpec> out;
  for (double s1 : r2_target_shapes()) {
    for (double s2 : r2_target_shapes()) out.push_back(r2_beta_target(s1, s2));
  }
  return out;
}

TargetSpec r2_moment_target(R2Prior kind, std::span<const double> lambda,
                            const Eigen::MatrixXd& x, std::size_t count,
                            std::uint64_t seed) {
  if (count < 2) throw std::invalid_argument("r2: need at least 2 draws");
  Rng rng(seed);
  std::vector<double> y = r2_predictive(kind, x)(lambda, 0, count, rng);
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double var = 0.0;
  for (double v : y) var += (v - mean) * (v - mean);
  var /= static_cast<double>(y.size() - 1);
  const double common = mean * (1.0 - mean) / var - 1.0;
  if (!(common > 0.0)) throw std::domain_error("r2: moments do not admit a Beta fit");
  return r2_beta_target(mean * common, (1.0 - mean) * common);
}

Problem make_r2_problem(R2Prior kind, const Eigen::MatrixXd& x, TargetSpec target) {
  const auto n = static_cast<std::size_t>(x.rows());
  const auto p = static_cast<std::size_t>(x.cols());
  return Problem{"r2_" + std::string(r2_prior_name(kind)),
                 r2_bounds(kind, n, p),
                 TargetSet(std::move(target)),
                 r2_predictive(kind, x),
                 r2_prior_model(kind, n, p),
                 r2_secondary(kind, p)};
}

}  // namespace ptx
