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

#include "fasthaar/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"
#include "fasthaar/multilevel.hpp"
#include "fasthaar/random.hpp"

namespace fasthaar {

namespace {

double median_seconds(const Signal& x, std::size_t levels, Mode mode,
                      std::size_t repetitions) {
  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const auto tree = decompose(x, levels, mode);
    const auto stop = std::chrono::steady_clock::now();
    // Keep the result observable so the call is not elided.
    if (tree.final_approx.size() == 0) return 0.0;
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

ErrorReport pointwise_error_db(const Signal& candidate, const Signal& oracle) {
  if (candidate.size() != oracle.size()) {
    throw Error(Errc::kLengthMismatch,
                "candidate has " + std::to_string(candidate.size()) +
                    " samples, oracle " + std::to_string(oracle.size()));
  }
  ErrorReport report;
  double peak = 0.0;
  for (double v : oracle) peak = std::max(peak, std::abs(v));
  report.reference_peak = peak > 0.0 ? peak : 1.0;

  report.pointwise_db.resize(oracle.size(), kErrorFloorDb);
  for (std::size_t n = 0; n < oracle.size(); ++n) {
    const double diff = std::abs(candidate[n] - oracle[n]);
    if (diff > 0.0) {
      const double db = 20.0 * std::log10(diff / report.reference_peak);
      report.pointwise_db[n] = std::max(db, kErrorFloorDb);
    }
    report.max_db = std::max(report.max_db, report.pointwise_db[n]);
  }
  return report;
}

BandErrorReports compare_transforms(const Signal& x) {
  const auto oracle = direct_analysis(x);
  const auto candidate = fast_analysis(x);
  return {pointwise_error_db(candidate.approx, oracle.approx),
          pointwise_error_db(candidate.detail, oracle.detail)};
}

OpReport OpReport::from_sink(const ArithmeticSink& sink, std::string label) {
  return {sink.mul_count, sink.add_count, sink.mul_count + sink.add_count,
          sink.path_evaluations, std::move(label)};
}

ComplexityComparison complexity_report(std::size_t n, std::size_t levels,
                                       TimingOptions timing,
                                       std::uint64_t seed) {
  const Signal x(random_samples(n, seed));

  ArithmeticSink direct_sink;
  ArithmeticSink fast_sink;
  decompose(x, levels, Mode::kDirect, &direct_sink);
  decompose(x, levels, Mode::kFast, &fast_sink);

  const std::string suffix =
      " analysis N=" + std::to_string(n) + " levels=" + std::to_string(levels);
  ComplexityComparison out;
  out.baseline = OpReport::from_sink(direct_sink, "direct" + suffix);
  out.fast = OpReport::from_sink(fast_sink, "fast" + suffix);
  out.mul_ratio = static_cast<double>(out.fast.mul_count) /
                  static_cast<double>(out.baseline.mul_count);
  out.total_ratio = static_cast<double>(out.fast.total) /
                    static_cast<double>(out.baseline.total);

  if (timing.enabled) {
    const std::size_t reps = std::max<std::size_t>(timing.repetitions, 1);
    out.wall_clock_baseline = median_seconds(x, levels, Mode::kDirect, reps);
    out.wall_clock_fast = median_seconds(x, levels, Mode::kFast, reps);
  }
  return out;
}

}  // namespace fasthaar
