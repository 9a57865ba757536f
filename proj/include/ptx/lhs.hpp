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

#ifndef PTX_LHS_HPP_
#define PTX_LHS_HPP_

#include <cstddef>
#include <vector>

#include "ptx/bounds.hpp"
#include "ptx/rng.hpp"

namespace ptx {

// n points with one point per 1/n stratum in every dimension, jittered
// uniformly within the stratum.
std::vector<std::vector<double>> latin_hypercube(std::size_t n,
                                                 const Bounds& bounds, Rng& rng);

// Same on the unit cube, dim columns.
std::vector<std::vector<double>> latin_hypercube_unit(std::size_t n,
                                                      std::size_t dim, Rng& rng);

}  // namespace ptx

#endif  // PTX_LHS_HPP_
