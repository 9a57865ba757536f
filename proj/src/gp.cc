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

#include "ptx/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ptx/bfgs.hpp"
#include "ptx/lhs.hpp"

namespace ptx {
namespace {

constexpr double kSqrt5 = 2.23606797749978969640917366873;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

struct Box {
  double lo;
  double hi;
  double to_log(double u) const { return lo + (hi - lo) * sigmoid(u); }
  double dlog_du(double u) const {
    double s = sigmoid(u);
    return (hi - lo) * s * (1.0 - s);
  }
};

// Negative log marginal likelihood of standardised outputs and its gradient
// with respect to (log l_1..log l_L, log signal, log nugget).
class Likelihood {
 public:
  Likelihood(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) : y_(y) {
    const Eigen::Index n = x.rows();
    const Eigen::Index L = x.cols();
    sq_.resize(L);
    for (Eigen::Index d = 0; d < L; ++d) {
      sq_[d].resize(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          double diff = x(i, d) - x(j, d);
          sq_[d](i, j) = diff * diff;
        }
      }
    }
  }

  double operator()(const Eigen::VectorXd& logp, Eigen::VectorXd* grad) const {
    const Eigen::Index n = y_.size();
    const Eigen::Index L = static_cast<Eigen::Index>(sq_.size());
    double sf2 = std::exp(logp(L));
    double sn2 = std::exp(logp(L + 1));
    Eigen::MatrixXd r2 = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index d = 0; d < L; ++d) r2 += sq_[d] * std::exp(-2.0 * logp(d));
    Eigen::MatrixXd r = r2.cwiseSqrt();
    Eigen::MatrixXd e = (-kSqrt5 * r).array().exp().matrix();
    Eigen::MatrixXd kf =
        sf2 * ((1.0 + kSqrt5 * r.array() + (5.0 / 3.0) * r2.array()) * e.array()).matrix();
    Eigen::MatrixXd k = kf;
    k.diagonal().array() += sn2;
    Eigen::LLT<Eigen::MatrixXd> llt(k);
    if (llt.info() != Eigen::Success) return kInf;
    Eigen::VectorXd alpha = llt.solve(y_);
    double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    double nll = 0.5 * y_.dot(alpha) + 0.5 * logdet +
                 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    if (!std::isfinite(nll)) return kInf;
    if (grad) {
      Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(n, n));
      w.noalias() -= alpha * alpha.transpose();
      grad->resize(L + 2);
      Eigen::MatrixXd g =
          (5.0 / 3.0) * sf2 * ((1.0 + kSqrt5 * r.array()) * e.array()).matrix();
      Eigen::MatrixXd wg = w.cwiseProduct(g);
      for (Eigen::Index d = 0; d < L; ++d) {
        (*grad)(d) = 0.5 * std::exp(-2.0 * logp(d)) * wg.cwiseProduct(sq_[d]).sum();
      }
      (*grad)(L) = 0.5 * w.cwiseProduct(kf).sum();
      (*grad)(L + 1) = 0.5 * sn2 * w.trace();
    }
    return nll;
  }

 private:
  Eigen::VectorXd y_;
  std::vector<Eigen::MatrixXd> sq_;
};

}  // namespace

double matern52(double r) {
  return (1.0 + kSqrt5 * r + (5.0 / 3.0) * r * r) * std::exp(-kSqrt5 * r);
}

GpSurrogate GpSurrogate::fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                             Rng& rng, const GpOptions& opts) {
  const Eigen::Index n = x.rows();
  const Eigen::Index L = x.cols();
  if (y.size() != n) throw std::invalid_argument("gp: input/output size mismatch");
  if (n < 2 * L + 1) throw std::invalid_argument("gp: need at least 2 dim + 1 rows");
  if (!y.allFinite() || !x.allFinite()) {
    throw std::invalid_argument("gp: non-finite training data");
  }

  GpSurrogate gp;
  gp.x_ = x;
  gp.y_mean_ = y.mean();
  double var = n > 1 ? (y.array() - gp.y_mean_).square().sum() / static_cast<double>(n - 1)
                     : 0.0;
  gp.y_scale_ = var > 0.0 ? std::sqrt(var) : 1.0;
  Eigen::VectorXd ys = (y.array() - gp.y_mean_) / gp.y_scale_;
  gp.lengthscales_ = Eigen::VectorXd::Ones(L);

  std::vector<Box> box(L + 2, Box{std::log(opts.lengthscale_min),
                                  std::log(opts.lengthscale_max)});
  box[L] = {std::log(opts.signal_min), std::log(opts.signal_max)};
  box[L + 1] = {std::log(opts.nugget_min), std::log(opts.nugget_max)};

  if (!(var > 0.0)) {
    // Constant outputs: nothing to learn.
    gp.constant_ = true;
    gp.signal_ = opts.signal_min;
    gp.nugget_ = opts.nugget_min;
    gp.alpha_ = Eigen::VectorXd::Zero(n);
    return gp;
  }

  Likelihood lik(x, ys);
  auto to_log = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd p(L + 2);
    for (Eigen::Index i = 0; i < L + 2; ++i) p(i) = box[i].to_log(u(i));
    return p;
  };
  ValueGrad fg = [&](const Eigen::VectorXd& u, Eigen::VectorXd& g) {
    Eigen::VectorXd gl;
    double v = lik(to_log(u), &gl);
    if (!std::isfinite(v)) {
      g = Eigen::VectorXd::Zero(L + 2);
      return kInf;
    }
    g.resize(L + 2);
    for (Eigen::Index i = 0; i < L + 2; ++i) g(i) = gl(i) * box[i].dlog_du(u(i));
    return v;
  };

  auto starts = latin_hypercube_unit(static_cast<std::size_t>(opts.restarts),
                                     static_cast<std::size_t>(L + 2), rng);
  double best = kInf;
  Eigen::VectorXd best_log;
  for (const auto& s : starts) {
    Eigen::VectorXd u0(L + 2);
    for (Eigen::Index i = 0; i < L + 2; ++i) {
      u0(i) = logit(std::clamp(s[i], 0.02, 0.98));
    }
    BfgsResult r = bfgs_minimize(fg, u0, opts.max_iter);
    if (std::isfinite(r.f) && r.f < best) {
      best = r.f;
      best_log = to_log(r.x);
    }
  }
  if (!std::isfinite(best)) {
    // Inflate the nugget from a neutral starting point until K factorises.
    best_log = Eigen::VectorXd::Zero(L + 2);
    best_log(L + 1) = std::log(std::max(opts.nugget_min, 1e-4));
    for (int attempt = 0; attempt < 6 && !std::isfinite(best); ++attempt) {
      best = lik(best_log, nullptr);
      if (!std::isfinite(best)) best_log(L + 1) += std::log(10.0);
    }
    if (!std::isfinite(best)) throw GpFitError("gp: kernel matrix not positive definite");
  }

  for (Eigen::Index d = 0; d < L; ++d) gp.lengthscales_(d) = std::exp(best_log(d));
  gp.signal_ = std::exp(best_log(L));
  gp.nugget_ = std::exp(best_log(L + 1));
  gp.lml_ = -best;

  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double r = ((x.row(i) - x.row(j)).array() / gp.lengthscales_.transpose().array())
                     .matrix()
                     .norm();
      k(i, j) = k(j, i) = gp.signal_ * matern52(r);
    }
  }
  k.diagonal().array() += gp.nugget_;
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success) throw GpFitError("gp: final factorisation failed");
  gp.chol_ = llt.matrixL();
  gp.alpha_ = llt.solve(ys);
  return gp;
}

void GpSurrogate::predict(const Eigen::MatrixXd& xs, Eigen::VectorXd* mean,
                          Eigen::VectorXd* var) const {
  const Eigen::Index m = xs.rows();
  const Eigen::Index n = x_.rows();
  if (constant_) {
    if (mean) *mean = Eigen::VectorXd::Constant(m, y_mean_);
    if (var) *var = Eigen::VectorXd::Constant(m, signal_ * y_scale_ * y_scale_);
    return;
  }
  Eigen::MatrixXd ks(n, m);
  Eigen::ArrayXd inv_l = lengthscales_.cwiseInverse().array();
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = ((x_.row(i) - xs.row(j)).array() * inv_l.transpose()).matrix().norm();
      ks(i, j) = signal_ * matern52(r);
    }
  }
  if (mean) *mean = ((ks.transpose() * alpha_).array() * y_scale_ + y_mean_).matrix();
  if (var) {
    Eigen::MatrixXd v = chol_.triangularView<Eigen::Lower>().solve(ks);
    Eigen::VectorXd s = (signal_ - v.colwise().squaredNorm().array()).max(0.0).matrix();
    *var = s * (y_scale_ * y_scale_);
  }
}

}  // namespace ptx
