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

#include "ptx/special.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "ptx/logspace.hpp"

namespace ptx::special {
namespace {

// Below this the direct value is replaced by a log-scale series.
constexpr double kTiny = 1e-280;
constexpr double kEps = 1e-17;

// log P(a, x) by the power series; converges for any x, fast for x < a + 1.
double log_gamma_p_series(double a, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * kEps) break;
  }
  return a * std::log(x) - x - lgamma(a + 1.0) + std::log(sum);
}

// log Q(a, x) by the Legendre continued fraction (modified Lentz); x > a + 1.
double log_gamma_q_cf(double a, double x) {
  constexpr double kFpMin = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return a * std::log(x) - x - lgamma(a) + std::log(h);
}

// log I_x(a, b) through x^a (1-x)^b / (a B(a,b)) * 2F1(a+b, 1; a+1; x).
double log_ibeta_series(double a, double b, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + b + k) / (a + 1.0 + k) * x;
    sum += term;
    if (term < sum * kEps) break;
  }
  return a * std::log(x) + b * std::log1p(-x) - std::log(a) - lbeta(a, b) +
         std::log(sum);
}

}  // namespace

double lgamma(double x) { return boost::math::lgamma(x); }

double lbeta(double a, double b) { return lgamma(a) + lgamma(b) - lgamma(a + b); }

double log_normal_cdf(double z) {
  if (std::isnan(z)) return z;
  if (z == std::numeric_limits<double>::infinity()) return 0.0;
  if (z > 0.0) return std::log1p(-0.5 * std::erfc(z / M_SQRT2));
  if (z > -37.0) return std::log(0.5 * std::erfc(-z / M_SQRT2));
  if (z == -std::numeric_limits<double>::infinity()) return kNegInf;
  // Mills-ratio asymptotic expansion.
  double z2 = z * z;
  double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2) +
                  105.0 / (z2 * z2 * z2 * z2);
  return -0.5 * z2 - 0.5 * std::log(2.0 * M_PI) - std::log(-z) +
         std::log(series);
}

double log_normal_ccdf(double z) { return log_normal_cdf(-z); }

double log_gamma_p(double a, double x) {
  if (!(x > 0.0)) return kNegInf;
  if (std::isinf(x)) return 0.0;
  double p = boost::math::gamma_p(a, x);
  if (p > 0.5) return std::log1p(-boost::math::gamma_q(a, x));
  if (p > kTiny) return std::log(p);
  return log_gamma_p_series(a, x);
}

double log_gamma_q(double a, double x) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return kNegInf;
  double q = boost::math::gamma_q(a, x);
  if (q > 0.5) return std::log1p(-boost::math::gamma_p(a, x));
  if (q > kTiny) return std::log(q);
  if (x > a + 1.0) return log_gamma_q_cf(a, x);
  return kNegInf;
}

double log_ibeta(double a, double b, double x) {
  if (!(x > 0.0)) return kNegInf;
  if (x >= 1.0) return 0.0;
  double v = boost::math::ibeta(a, b, x);
  if (v > 0.5) return std::log1p(-boost::math::ibetac(a, b, x));
  if (v > kTiny) return std::log(v);
  return log_ibeta_series(a, b, x);
}

}  // namespace ptx::special
