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

#include "ptx/design.hpp"

#include <cmath>
#include <stdexcept>

namespace ptx {

bool same_lambda(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > kDuplicateTolerance) return false;
  }
  return true;
}

Design::Design(Bounds bounds) : bounds_(std::move(bounds)) {}

void Design::add(DesignRow row) {
  if (!bounds_.contains(row.lambda)) {
    throw std::out_of_range("design: lambda outside the bounds");
  }
  for (auto& r : rows_) {
    if (!same_lambda(r.lambda, row.lambda)) continue;
    double n0 = r.count;
    double n1 = row.count;
    r.log_D = (n0 * r.log_D + n1 * row.log_D) / (n0 + n1);
    if (r.N && row.N) {
      r.N = (n0 * *r.N + n1 * *row.N) / (n0 + n1);
    } else if (row.N) {
      r.N = row.N;
    }
    r.count += row.count;
    return;
  }
  rows_.push_back(std::move(row));
}

bool Design::complete() const {
  for (const auto& r : rows_) {
    if (!r.N) return false;
  }
  return true;
}

}  // namespace ptx
