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

#ifndef PTX_BFGS_HPP_
#define PTX_BFGS_HPP_

#include <functional>

#include <Eigen/Dense>

namespace ptx {

// Returns f(x) and writes the gradient into grad.
using ValueGrad = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct BfgsResult {
  Eigen::VectorXd x;
  double f;
  int iterations;
  bool converged;
};

// Unconstrained quasi-Newton minimisation with a backtracking Armijo line
// search. Non-finite trial values are treated as +inf.
BfgsResult bfgs_minimize(const ValueGrad& fg, Eigen::VectorXd x0,
                         int max_iter = 100, double gtol = 1e-6);

}  // namespace ptx

#endif  // PTX_BFGS_HPP_
