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

#ifndef PTX_SPECIAL_HPP_
#define PTX_SPECIAL_HPP_

// Log-scale special functions that stay finite deep into the tails, where
// the plain CDF underflows.

namespace ptx::special {

double lgamma(double x);
double lbeta(double a, double b);

// log Phi(z) for the standard normal.
double log_normal_cdf(double z);
// log(1 - Phi(z)).
double log_normal_ccdf(double z);

// Regularised incomplete gamma P(a, x) and Q(a, x) on the log scale.
double log_gamma_p(double a, double x);
double log_gamma_q(double a, double x);

// Regularised incomplete beta I_x(a, b) on the log scale.
double log_ibeta(double a, double b, double x);

}  // namespace ptx::special

#endif  // PTX_SPECIAL_HPP_
