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

// Error-rate and operation-count comparison between the direct and fast
// filter banks.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fasthaar/signal.hpp"

namespace fasthaar {

inline constexpr double kErrorFloorDb = -300.0;

// Peak-normalized pointwise amplitude error:
//   db[n] = 20 log10(|candidate[n] - oracle[n]| / max|oracle|)
// floored at kErrorFloorDb. An all-zero oracle uses a peak of 1.
struct ErrorReport {
  std::vector<double> pointwise_db;
  double max_db = kErrorFloorDb;
  double reference_peak = 1.0;
  double floor_db = kErrorFloorDb;
};

ErrorReport pointwise_error_db(const Signal& candidate, const Signal& oracle);

struct BandErrorReports {
  ErrorReport approx;
  ErrorReport detail;
};

// direct_analysis is the oracle, fast_analysis the candidate.
BandErrorReports compare_transforms(const Signal& x);

struct OpReport {
  std::uint64_t mul_count = 0;
  std::uint64_t add_count = 0;
  std::uint64_t total = 0;
  std::uint64_t path_evaluations = 0;
  std::string label;

  static OpReport from_sink(const ArithmeticSink& sink, std::string label);
};

struct ComplexityComparison {
  OpReport baseline;
  OpReport fast;
  double mul_ratio = 0.0;
  double total_ratio = 0.0;
  // Median wall-clock seconds per decomposition; informative only.
  std::optional<double> wall_clock_baseline;
  std::optional<double> wall_clock_fast;
};

struct TimingOptions {
  bool enabled = false;
  std::size_t repetitions = 11;
};

// Decomposes a seeded pseudo-random signal of length n in both modes with
// counting sinks. Counts depend only on n and levels.
ComplexityComparison complexity_report(std::size_t n, std::size_t levels,
                                       TimingOptions timing = {},
                                       std::uint64_t seed = 42);

}  // namespace fasthaar
