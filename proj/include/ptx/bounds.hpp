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

#ifndef PTX_BOUNDS_HPP_
#define PTX_BOUNDS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ptx {

// Box constraints for the hyperparameter vector.
class Bounds {
 public:
  // Throws std::invalid_argument unless lower < upper and both finite in
  // every dimension. Names default to lambda_0, lambda_1, ...
  Bounds(std::vector<double> lower, std::vector<double> upper,
         std::vector<std::string> names = {});

  std::size_t dim() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(std::span<const double> x) const;
  std::vector<double> clip(std::span<const double> x) const;
  std::vector<double> to_unit(std::span<const double> x) const;
  std::vector<double> from_unit(std::span<const double> u) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
};

}  // namespace ptx

#endif  // PTX_BOUNDS_HPP_
