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

#ifndef PTX_DISTRIBUTIONS_HPP_
#define PTX_DISTRIBUTIONS_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ptx/rng.hpp"

namespace ptx {

enum class Family {
  kNormal,
  kLogNormal,
  kGamma,
  kBeta,
  kStudentT,
  kExponentialShifted,
  kInverseGamma,
  kLaplace,
  kHalfCauchy,
  kDirichlet,
  kWeibullPH,
};

std::string_view family_name(Family f);

// A parametric family together with its parameters, validated on
// construction. Parameter order follows the factory signatures below.
// Univariate specs may carry a right truncation point.
class DistSpec {
 public:
  static DistSpec normal(double mean, double sd);
  static DistSpec lognormal(double meanlog, double sdlog);
  static DistSpec gamma(double shape, double rate);
  // Beta(a, b) stretched onto (0, upper).
  static DistSpec beta(double a, double b, double upper = 1.0);
  static DistSpec student_t(double dof, double location, double scale);
  static DistSpec exponential_shifted(double rate, double shift);
  static DistSpec inverse_gamma(double shape, double scale);
  static DistSpec laplace(double location, double scale);
  static DistSpec half_cauchy(double scale);
  static DistSpec dirichlet(std::vector<double> concentration);
  // Survival exp(-y^shape * exp(log_rate)).
  static DistSpec weibull_ph(double shape, double log_rate);

  // Builds from a family name as used in config files ("normal", "gamma",
  // "student_t", ...). Throws std::invalid_argument on unknown names or bad
  // parameter counts.
  static DistSpec from_name(std::string_view name, std::vector<double> params);

  // Returns this distribution conditioned on Y <= upper.
  DistSpec truncated_above(double upper) const;

  Family family() const { return family_; }
  std::string_view name() const { return family_name(family_); }
  const std::vector<double>& params() const { return params_; }
  bool truncated() const { return trunc_ < kInf; }
  double truncation() const { return trunc_; }
  // log F(upper) of the untruncated law; 0 when not truncated.
  double log_truncation_mass() const { return log_trunc_mass_; }
  bool univariate() const { return family_ != Family::kDirichlet; }

  double mean() const;
  double variance() const;
  double log_norm() const { return log_norm_; }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  DistSpec(Family f, std::vector<double> params);

  Family family_;
  std::vector<double> params_;
  // Log normalising constant of the density, where the family has one.
  double log_norm_ = 0.0;
  double trunc_ = kInf;
  double log_trunc_mass_ = 0.0;
};

struct MixtureComponent {
  double weight;
  DistSpec dist;
};

struct Atom {
  double weight;
  double location;
};

// Finite mixture of univariate continuous components and point masses.
class MixtureSpec {
 public:
  MixtureSpec(std::vector<MixtureComponent> components,
              std::vector<Atom> atoms = {});
  static MixtureSpec single(DistSpec d);

  const std::vector<MixtureComponent>& components() const {
    return components_;
  }
  const std::vector<Atom>& atoms() const { return atoms_; }

  double mean() const;

 private:
  std::vector<MixtureComponent> components_;
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
  friend double draw(const MixtureSpec& m, Rng& rng);
};

double draw(const DistSpec& d, Rng& rng);
double draw(const MixtureSpec& m, Rng& rng);
std::vector<double> sample(const DistSpec& d, std::size_t n, Rng& rng);
std::vector<double> sample(const MixtureSpec& m, std::size_t n, Rng& rng);
std::vector<double> sample_dirichlet(std::span<const double> alpha, Rng& rng);

double log_cdf(const DistSpec& d, double y);
double log_cdf(const MixtureSpec& m, double y);

double log_density(const DistSpec& d, double y);
// Log-mass at atom locations, otherwise the log-density of the continuous
// part.
double log_density(const MixtureSpec& m, double y);
// Weighted log-density of the continuous components only.
double log_continuous_density(const MixtureSpec& m, double y);
// Log of the atom weight at y; -inf when y is not an atom location.
double log_atom_mass(const MixtureSpec& m, double y);

// Cholesky factor of a correlation matrix from B(B-1)/2 canonical partial
// correlations, ordered column by column below the diagonal.
Eigen::MatrixXd lkj_partial_to_cholesky(std::span<const double> omega, int dim);
// Number of partial correlations for a dim x dim correlation matrix.
inline int lkj_size(int dim) { return dim * (dim - 1) / 2; }

// Cholesky factor of an LKJ(eta) correlation matrix.
Eigen::MatrixXd lkj_corr_cholesky_rng(int dim, double eta, Rng& rng);

// Multivariate skew-normal with location 0, scale matrix S and slant eta,
// sampled through the conditioning representation.
class MvSkewNormal {
 public:
  MvSkewNormal(const Eigen::MatrixXd& scale, const Eigen::VectorXd& slant);

  int dim() const { return static_cast<int>(omega_.size()); }
  void draw(Rng& rng, Eigen::Ref<Eigen::VectorXd> out) const;
  // delta_j = (Omega_bar eta)_j / sqrt(1 + eta' Omega_bar eta).
  const Eigen::VectorXd& delta() const { return delta_; }
  // Marginal standard deviations omega_j sqrt(1 - 2 delta_j^2 / pi).
  Eigen::VectorXd marginal_sd() const;

 private:
  Eigen::VectorXd omega_;
  Eigen::VectorXd delta_;
  Eigen::MatrixXd chol_;
};

Eigen::MatrixXd sample_mv_skew_normal(const Eigen::MatrixXd& scale,
                                      const Eigen::VectorXd& slant,
                                      std::size_t n, Rng& rng);

}  // namespace ptx

#endif  // PTX_DISTRIBUTIONS_HPP_
