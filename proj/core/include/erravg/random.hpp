// Copyright 2026 The erravg Authors
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

#pragma once

#include <cstdint>
#include <limits>

namespace erravg {

/// SplitMix64 generator; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for one trial. The starting state is a hash of
/// (seed, index), so streams for neighbouring indices do not overlap and the
/// draws of a trial never depend on how trials are scheduled.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = SplitMix64::mix(seed ^ 0x6A09E667F3BCC909ULL);
  const std::uint64_t b = SplitMix64::mix(index + 0xBB67AE8584CAA73BULL);
  return SplitMix64(SplitMix64::mix(a ^ (b + 0x3C6EF372FE94F82BULL + (a << 6) + (a >> 2))));
}

}  // namespace erravg
