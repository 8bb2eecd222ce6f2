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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace fasthaar {

// A finite sequence of real samples. Every sample is finite; construction
// from data containing NaN or Inf throws Error(kNonFiniteValue).
class Signal {
 public:
  Signal() = default;
  explicit Signal(std::vector<double> samples);
  Signal(std::initializer_list<double> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  std::span<const double> view() const noexcept { return samples_; }
  const std::vector<double>& samples() const& noexcept { return samples_; }
  std::vector<double> release() && noexcept { return std::move(samples_); }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> samples_;
};

// Approximation (lowpass) and detail (highpass) bands of one analysis level.
struct SubbandPair {
  Signal approx;
  Signal detail;
};

// Counts arithmetic on sample data for one transform invocation.
// Subtractions count as additions; negation and index arithmetic are free.
// path_evaluations sums, over the lowpass and highpass paths, the output
// positions each path computes: N per path for the full-rate bank, N/2 per
// path once decimation moves to the input.
struct ArithmeticSink {
  std::uint64_t mul_count = 0;
  std::uint64_t add_count = 0;
  std::uint64_t path_evaluations = 0;

  void mul(std::uint64_t n = 1) noexcept { mul_count += n; }
  void add(std::uint64_t n = 1) noexcept { add_count += n; }
};

enum class Mode { kDirect, kFast };

std::string_view mode_name(Mode mode) noexcept;

}  // namespace fasthaar
