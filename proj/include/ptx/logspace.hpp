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

#ifndef PTX_LOGSPACE_HPP_
#define PTX_LOGSPACE_HPP_

#include <limits>
#include <span>

namespace ptx {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum(exp(v))) with max-shift. -inf entries contribute nothing; an
// all -inf input (or an empty one) yields -inf.
double log_sum_exp(std::span<const double> v);
double log_add_exp(double a, double b);

// log(1 - exp(-x)) for x >= 0, using the expm1/log1p branch split at log 2.
double log1mexp(double x);

// log(|exp(a) - exp(b)|); -inf when the two are equal.
double log_abs_diff_exp(double a, double b);

}  // namespace ptx

#endif  // PTX_LOGSPACE_HPP_
