// Copyright 2026 The asrcorrect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRCORRECT_UTIL_RNG_HPP_
#define ASRCORRECT_UTIL_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace asrcorrect {

// Deterministic random source. mt19937_64 has a standard-specified output
// sequence, and every derived draw below is computed with fixed arithmetic,
// so seeds reproduce bit-for-bit across platforms and standard libraries
// (std::shuffle and the distribution classes make no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) via rejection sampling; bound must be positive.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t value = next();
    while (value >= limit) value = next();
    return value % bound;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(bounded(size)); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // Index drawn proportionally to non-negative weights (not all zero).
  std::size_t weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double target = unit() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      cumulative += weights[i];
      if (target < cumulative) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace asrcorrect

#endif  // ASRCORRECT_UTIL_RNG_HPP_
