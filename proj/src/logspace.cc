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

#include "ptx/logspace.hpp"

#include <algorithm>
#include <cmath>

namespace ptx {

double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  if (std::isinf(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == kNegInf) return kNegInf;
  if (std::isinf(a)) return a;
  return a + std::log1p(std::exp(b - a));
}

double log1mexp(double x) {
  if (x < 0.0 || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= M_LN2) return std::log(-std::expm1(-x));
  return std::log1p(-std::exp(-x));
}

double log_abs_diff_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == b) return kNegInf;
  if (b == kNegInf) return a;
  return a + log1mexp(a - b);
}

}  // namespace ptx
