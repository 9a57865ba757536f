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

#include "ptx/lhs.hpp"

#include <numeric>
#include <stdexcept>

namespace ptx {

std::vector<std::vector<double>> latin_hypercube_unit(std::size_t n,
                                                      std::size_t dim, Rng& rng) {
  if (n < 1) throw std::invalid_argument("latin_hypercube: n must be >= 1");
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  std::vector<std::size_t> perm(n);
  for (std::size_t d = 0; d < dim; ++d) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.index(i + 1)]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      pts[i][d] = (static_cast<double>(perm[i]) + rng.uniform()) /
                  static_cast<double>(n);
    }
  }
  return pts;
}

std::vector<std::vector<double>> latin_hypercube(std::size_t n,
                                                 const Bounds& bounds, Rng& rng) {
  auto pts = latin_hypercube_unit(n, bounds.dim(), rng);
  for (auto& p : pts) p = bounds.from_unit(p);
  return pts;
}

}  // namespace ptx
