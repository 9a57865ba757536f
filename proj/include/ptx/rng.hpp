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

#ifndef PTX_RNG_HPP_
#define PTX_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace ptx {

// SplitMix64 finaliser. Used to derive stream seeds from (seed, key) pairs.
std::uint64_t mix64(std::uint64_t x);

// Combines a base seed with an ordered list of integer keys.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> keys);

// Seedable random stream. Streams derived with `split` depend only on the
// seed this stream was constructed with and the key, never on how many
// draws have been consumed, so per-row or per-replicate streams are stable
// under reordering and parallel execution.
//
// Satisfies UniformRandomBitGenerator so it can drive <random> distributions.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t key) const;
  Rng split(std::initializer_list<std::uint64_t> keys) const;

  // Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double normal();
  double exponential();
  // Gamma(shape, 1) draw returned on the log scale; stays finite for tiny
  // shapes where the draw itself underflows to zero.
  double log_gamma_variate(double shape);
  double gamma(double shape, double rate);
  std::size_t index(std::size_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace ptx

#endif  // PTX_RNG_HPP_
