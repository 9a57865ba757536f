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

#ifndef PTX_GP_HPP_
#define PTX_GP_HPP_

#include <stdexcept>

#include <Eigen/Dense>

#include "ptx/rng.hpp"

namespace ptx {

struct GpOptions {
  int restarts = 5;
  int max_iter = 100;
  // Hyperparameter boxes, in scaled-input and standardised-output units.
  double lengthscale_min = 1e-2;
  double lengthscale_max = 1e2;
  double signal_min = 1e-6;
  double signal_max = 1e2;
  double nugget_min = 1e-6;
  double nugget_max = 1.0;
};

class GpFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero-mean GP with a Matern-5/2 ARD kernel plus nugget, fitted by
// maximising the log marginal likelihood. Inputs are expected on the unit
// cube; outputs are standardised internally.
class GpSurrogate {
 public:
  // Throws std::invalid_argument for non-finite outputs or fewer than
  // 2 dim + 1 rows, and GpFitError when no stable factorisation is found
  // even after inflating the nugget.
  static GpSurrogate fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         Rng& rng, const GpOptions& opts = {});

  // Posterior mean and latent variance (>= 0) in output units.
  void predict(const Eigen::MatrixXd& xs, Eigen::VectorXd* mean,
               Eigen::VectorXd* var) const;

  const Eigen::VectorXd& lengthscales() const { return lengthscales_; }
  double signal_variance() const { return signal_; }
  double nugget() const { return nugget_; }
  double log_marginal_likelihood() const { return lml_; }
  double output_mean() const { return y_mean_; }
  double output_scale() const { return y_scale_; }

 private:
  Eigen::MatrixXd x_;
  Eigen::VectorXd alpha_;
  Eigen::MatrixXd chol_;
  Eigen::VectorXd lengthscales_;
  double signal_ = 1.0;
  double nugget_ = 1e-6;
  double lml_ = 0.0;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  bool constant_ = false;
};

// Matern-5/2 correlation at scaled distance r.
double matern52(double r);

}  // namespace ptx

#endif  // PTX_GP_HPP_
