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

#include "ptx/bfgs.hpp"

#include <cmath>
#include <limits>

namespace ptx {

BfgsResult bfgs_minimize(const ValueGrad& fg, Eigen::VectorXd x, int max_iter,
                         double gtol) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd g(n);
  double f = fg(x, g);
  BfgsResult res{x, f, 0, false};
  if (!std::isfinite(f) || !g.allFinite()) return res;
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd g_new(n);
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it + 1;
    if (g.lpNorm<Eigen::Infinity>() < gtol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd p = -H * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      H.setIdentity();
      p = -g;
      slope = -g.squaredNorm();
    }
    double step = 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    Eigen::VectorXd x_new;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      x_new = x + step * p;
      f_new = fg(x_new, g_new);
      if (std::isfinite(f_new) && g_new.allFinite() &&
          f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    Eigen::VectorXd s = x_new - x;
    Eigen::VectorXd y = g_new - g;
    double sy = s.dot(y);
    bool small_change = std::fabs(f - f_new) < 1e-12 * (1.0 + std::fabs(f));
    x = x_new;
    f = f_new;
    g = g_new;
    if (sy > 1e-10) {
      double rho = 1.0 / sy;
      Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
      H = (I - rho * s * y.transpose()) * H * (I - rho * y * s.transpose()) +
          rho * s * s.transpose();
    }
    if (small_change) {
      res.converged = true;
      break;
    }
  }
  res.x = x;
  res.f = f;
  return res;
}

}  // namespace ptx
