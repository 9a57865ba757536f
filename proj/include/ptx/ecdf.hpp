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

#ifndef PTX_ECDF_HPP_
#define PTX_ECDF_HPP_

#include <cstddef>
#include <vector>

namespace ptx {

// Right-continuous empirical CDF: eval(y) = #{samples <= y} / n.
class Ecdf {
 public:
  // Throws std::invalid_argument on empty or NaN input.
  explicit Ecdf(std::vector<double> samples);

  double eval(double y) const;
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

inline Ecdf build_ecdf(std::vector<double> samples) {
  return Ecdf(std::move(samples));
}

}  // namespace ptx

#endif  // PTX_ECDF_HPP_
