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

#ifndef PTX_DESIGN_HPP_
#define PTX_DESIGN_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptx/bounds.hpp"

namespace ptx {

struct DesignRow {
  std::vector<double> lambda;
  double log_D;
  std::optional<double> N;
  // Number of evaluations merged into this row.
  int count = 1;
};

// Evaluated hyperparameters. Rows within 1e-12 of an existing row (max
// coordinate difference) are merged by averaging their objectives.
class Design {
 public:
  explicit Design(Bounds bounds);

  // Throws std::out_of_range when lambda is outside the bounds.
  void add(DesignRow row);
  const std::vector<DesignRow>& rows() const { return rows_; }
  std::vector<DesignRow>& mutable_rows() { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const Bounds& bounds() const { return bounds_; }
  bool complete() const;  // every row has N

 private:
  Bounds bounds_;
  std::vector<DesignRow> rows_;
};

inline constexpr double kDuplicateTolerance = 1e-12;
bool same_lambda(std::span<const double> a, std::span<const double> b);

}  // namespace ptx

#endif  // PTX_DESIGN_HPP_
