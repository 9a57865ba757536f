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

#include "ptx/ecdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptx {

Ecdf::Ecdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("ecdf: empty sample");
  for (double y : sorted_) {
    if (std::isnan(y)) throw std::invalid_argument("ecdf: NaN sample");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::eval(double y) const {
  if (std::isnan(y)) return y;
  auto k = std::upper_bound(sorted_.begin(), sorted_.end(), y) - sorted_.begin();
  return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

}  // namespace ptx
