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

#ifndef PTX_PARETO_HPP_
#define PTX_PARETO_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ptx {

// Objective pair, both minimised.
using Point2 = std::array<double, 2>;

// a dominates b: no worse in both objectives and better in at least one.
bool dominates(const Point2& a, const Point2& b);

// Indices of the non-dominated points, in input order. Exact duplicates of
// a non-dominated point are all kept.
std::vector<std::size_t> pareto_front(std::span<const Point2> points);

// 1 for non-dominated points, k for points non-dominated once ranks < k are
// removed.
std::vector<int> nds_rank(std::span<const Point2> points);

// Exclusive hypervolume of each point with respect to `ref`. Dominated
// points and duplicated points contribute 0. Throws std::invalid_argument
// unless every point is strictly below ref in both objectives.
std::vector<double> hypervolume_contribution(std::span<const Point2> points,
                                             const Point2& ref);

double hypervolume(std::span<const Point2> points, const Point2& ref);

// Componentwise max plus 10% of the range (a small positive pad when the
// range is zero).
Point2 reference_point(std::span<const Point2> points);

}  // namespace ptx

#endif  // PTX_PARETO_HPP_
