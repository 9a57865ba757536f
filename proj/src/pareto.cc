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

#include "ptx/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ptx {
namespace {

std::vector<std::size_t> sorted_order(std::span<const Point2> p) {
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return p[a] < p[b];
  });
  return idx;
}

}  // namespace

bool dominates(const Point2& a, const Point2& b) {
  return a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1]);
}

std::vector<std::size_t> pareto_front(std::span<const Point2> points) {
  std::vector<std::size_t> out;
  if (points.empty()) return out;
  // Sweep in (f1, f2) order keeping the smallest f2 seen so far and the
  // point that first attained it; only an exact copy of that point survives
  // a tie.
  const Point2* best = nullptr;
  for (std::size_t i : sorted_order(points)) {
    const Point2& p = points[i];
    if (best == nullptr || p[1] < (*best)[1]) {
      best = &points[i];
      out.push_back(i);
    } else if (p == *best) {
      out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nds_rank(std::span<const Point2> points) {
  std::vector<int> rank(points.size(), 0);
  std::vector<std::size_t> remaining(points.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  int level = 1;
  while (!remaining.empty()) {
    std::vector<Point2> sub;
    sub.reserve(remaining.size());
    for (std::size_t i : remaining) sub.push_back(points[i]);
    std::vector<std::size_t> front = pareto_front(sub);
    std::vector<bool> on_front(remaining.size(), false);
    for (std::size_t k : front) on_front[k] = true;
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (on_front[k]) {
        rank[remaining[k]] = level;
      } else {
        next.push_back(remaining[k]);
      }
    }
    remaining = std::move(next);
    ++level;
  }
  return rank;
}

std::vector<double> hypervolume_contribution(std::span<const Point2> points,
                                             const Point2& ref) {
  for (const auto& p : points) {
    if (!(p[0] < ref[0] && p[1] < ref[1])) {
      throw std::invalid_argument("hypervolume: point does not dominate the reference");
    }
  }
  std::vector<double> out(points.size(), 0.0);
  std::vector<std::size_t> front = pareto_front(points);
  std::sort(front.begin(), front.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  // Collapse exact duplicates; a duplicated point has no exclusive volume.
  std::vector<std::size_t> uniq;
  std::vector<bool> duplicated;
  for (std::size_t i : front) {
    if (!uniq.empty() && points[uniq.back()] == points[i]) {
      duplicated.back() = true;
    } else {
      uniq.push_back(i);
      duplicated.push_back(false);
    }
  }
  for (std::size_t k = 0; k < uniq.size(); ++k) {
    if (duplicated[k]) continue;
    const Point2& p = points[uniq[k]];
    double right = k + 1 < uniq.size() ? points[uniq[k + 1]][0] : ref[0];
    double top = k > 0 ? points[uniq[k - 1]][1] : ref[1];
    out[uniq[k]] = (right - p[0]) * (top - p[1]);
  }
  return out;
}

double hypervolume(std::span<const Point2> points, const Point2& ref) {
  std::vector<std::size_t> front = pareto_front(points);
  std::sort(front.begin(), front.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });
  double hv = 0.0;
  double top = ref[1];
  for (std::size_t i : front) {
    const Point2& p = points[i];
    if (!(p[0] < ref[0] && p[1] < top)) continue;
    hv += (ref[0] - p[0]) * (top - p[1]);
    top = p[1];
  }
  return hv;
}

Point2 reference_point(std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("reference_point: no points");
  Point2 lo = points[0];
  Point2 hi = points[0];
  for (const auto& p : points) {
    for (int d = 0; d < 2; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  }
  Point2 ref;
  for (int d = 0; d < 2; ++d) {
    double pad = 0.1 * (hi[d] - lo[d]);
    if (!(pad > 0.0)) pad = 1e-9 * std::max(1.0, std::fabs(hi[d]));
    ref[d] = hi[d] + pad;
  }
  return ref;
}

}  // namespace ptx
