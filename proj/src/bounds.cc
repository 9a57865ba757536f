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

#include "ptx/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptx {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper,
               std::vector<std::string> names)
    : lower_(std::move(lower)), upper_(std::move(upper)), names_(std::move(names)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw std::invalid_argument("bounds: lower and upper must be non-empty and equal length");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      names_.push_back("lambda_" + std::to_string(i));
    }
  }
  if (names_.size() != lower_.size()) {
    throw std::invalid_argument("bounds: one name per dimension");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) ||
        !(lower_[i] < upper_[i])) {
      throw std::invalid_argument("bounds: need finite lower < upper for '" +
                                  names_[i] + "'");
    }
  }
}

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

std::vector<double> Bounds::clip(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(out[i], lower_[i], upper_[i]);
  }
  return out;
}

std::vector<double> Bounds::to_unit(std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = (x[i] - lower_[i]) / (upper_[i] - lower_[i]);
  }
  return out;
}

std::vector<double> Bounds::from_unit(std::span<const double> u) const {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = std::clamp(lower_[i] + u[i] * (upper_[i] - lower_[i]), lower_[i],
                        upper_[i]);
  }
  return out;
}

}  // namespace ptx
