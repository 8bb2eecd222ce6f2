/*
Copyright 2026 The fasthaar Authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Reproducible test-signal generator.
//
// xoshiro256** (Blackman & Vigna), state seeded by four SplitMix64 outputs:
//   splitmix: s += 0x9E3779B97F4A7C15;
//             z = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9;
//             z = (z ^ (z >> 27)) * 0x94D049BB133111EB;  return z ^ (z >> 31)
//   next:     r = rotl(s1 * 5, 7) * 9;  t = s1 << 17;
//             s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45)
// uniform() maps the top 53 bits to [0, 1); symmetric() to [-1, 1).

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fasthaar {

class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept {
    for (auto& word : state_) word = splitmix(seed);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double symmetric() noexcept { return 2.0 * uniform() - 1.0; }

  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  static std::uint64_t splitmix(std::uint64_t& s) noexcept {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
};

// n samples uniform in [-amplitude, amplitude).
inline std::vector<double> random_samples(std::size_t n, std::uint64_t seed,
                                          double amplitude = 1.0) {
  Xoshiro256 rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = amplitude * rng.symmetric();
  return out;
}

}  // namespace fasthaar
