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

#include "fasthaar/haar.hpp"

#include <string>
#include <vector>

#include "fasthaar/error.hpp"

namespace fasthaar {

namespace {

void require_analysis_input(const Signal& x) {
  if (x.empty()) throw Error(Errc::kEmptySignal, "analysis of an empty signal");
  if (x.size() % 2 != 0) {
    throw Error(Errc::kOddLength,
                "analysis needs an even length, got " + std::to_string(x.size()));
  }
}

void require_synthesis_input(const SubbandPair& bands) {
  if (bands.approx.size() != bands.detail.size()) {
    throw Error(Errc::kLengthMismatch,
                "band lengths differ: approx " +
                    std::to_string(bands.approx.size()) + ", detail " +
                    std::to_string(bands.detail.size()));
  }
  if (bands.approx.empty()) {
    throw Error(Errc::kEmptySignal, "synthesis of empty bands");
  }
}

// y[n] = taps[0] * u[n] + taps[1] * u[n-1], with u[-1] = 0.
std::vector<double> convolve2(std::span<const double> u,
                              const std::array<double, 2>& taps,
                              ArithmeticSink* sink) {
  std::vector<double> y(u.size());
  for (std::size_t n = 0; n < u.size(); ++n) {
    const double prev = n > 0 ? u[n - 1] : 0.0;
    y[n] = taps[0] * u[n] + taps[1] * prev;
  }
  if (sink != nullptr) {
    sink->mul(2 * u.size());
    sink->add(u.size());
    sink->path_evaluations += u.size();
  }
  return y;
}

std::vector<double> upsample(std::span<const double> band) {
  std::vector<double> up(2 * band.size(), 0.0);
  for (std::size_t k = 0; k < band.size(); ++k) up[2 * k] = band[k];
  return up;
}

}  // namespace

std::pair<Signal, Signal> split_polyphase(const Signal& x) {
  if (x.size() % 2 != 0) {
    throw Error(Errc::kOddLength,
                "polyphase split needs an even length, got " +
                    std::to_string(x.size()));
  }
  const std::size_t half = x.size() / 2;
  std::vector<double> even(half);
  std::vector<double> odd(half);
  for (std::size_t k = 0; k < half; ++k) {
    even[k] = x[2 * k];
    odd[k] = x[2 * k + 1];
  }
  return {Signal(std::move(even)), Signal(std::move(odd))};
}

Signal merge_polyphase(const Signal& even, const Signal& odd) {
  if (even.size() != odd.size()) {
    throw Error(Errc::kLengthMismatch,
                "polyphase merge of lengths " + std::to_string(even.size()) +
                    " and " + std::to_string(odd.size()));
  }
  std::vector<double> out(2 * even.size());
  for (std::size_t k = 0; k < even.size(); ++k) {
    out[2 * k] = even[k];
    out[2 * k + 1] = odd[k];
  }
  return Signal(std::move(out));
}

SubbandPair direct_analysis(const Signal& x, ArithmeticSink* sink) {
  require_analysis_input(x);
  const auto filters = HaarFilterSet::standard();
  const auto low = convolve2(x.view(), filters.analysis_low, sink);
  const auto high = convolve2(x.view(), filters.analysis_high, sink);

  const std::size_t half = x.size() / 2;
  std::vector<double> approx(half);
  std::vector<double> detail(half);
  for (std::size_t k = 0; k < half; ++k) {
    approx[k] = low[2 * k + 1];
    detail[k] = high[2 * k + 1];
  }
  return {Signal(std::move(approx)), Signal(std::move(detail))};
}

SubbandPair fast_analysis(const Signal& x, ArithmeticSink* sink) {
  require_analysis_input(x);
  const auto [even, odd] = split_polyphase(x);
  const double scale = HaarFilterSet::standard().polyphase_scalar;

  const std::size_t half = even.size();
  std::vector<double> approx(half);
  std::vector<double> detail(half);
  for (std::size_t k = 0; k < half; ++k) {
    approx[k] = (even[k] + odd[k]) * scale;
    detail[k] = (even[k] - odd[k]) * scale;
  }
  if (sink != nullptr) {
    sink->mul(2 * half);
    sink->add(2 * half);
    sink->path_evaluations += 2 * half;
  }
  return {Signal(std::move(approx)), Signal(std::move(detail))};
}

Signal direct_synthesis(const SubbandPair& bands, ArithmeticSink* sink) {
  require_synthesis_input(bands);
  const auto filters = HaarFilterSet::standard();
  const auto low = convolve2(upsample(bands.approx.view()),
                             filters.synthesis_low, sink);
  const auto high = convolve2(upsample(bands.detail.view()),
                              filters.synthesis_high, sink);

  std::vector<double> out(low.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = low[n] + high[n];
  if (sink != nullptr) sink->add(out.size());
  return Signal(std::move(out));
}

Signal fast_synthesis(const SubbandPair& bands, ArithmeticSink* sink) {
  require_synthesis_input(bands);
  const double scale = HaarFilterSet::standard().polyphase_scalar;

  const std::size_t half = bands.approx.size();
  std::vector<double> even(half);
  std::vector<double> odd(half);
  for (std::size_t k = 0; k < half; ++k) {
    even[k] = (bands.approx[k] + bands.detail[k]) * scale;
    odd[k] = (bands.approx[k] - bands.detail[k]) * scale;
  }
  if (sink != nullptr) {
    sink->mul(2 * half);
    sink->add(2 * half);
    sink->path_evaluations += 2 * half;
  }
  return merge_polyphase(Signal(std::move(even)), Signal(std::move(odd)));
}

SubbandPair analyze(const Signal& x, Mode mode, ArithmeticSink* sink) {
  return mode == Mode::kDirect ? direct_analysis(x, sink)
                               : fast_analysis(x, sink);
}

Signal synthesize(const SubbandPair& bands, Mode mode, ArithmeticSink* sink) {
  return mode == Mode::kDirect ? direct_synthesis(bands, sink)
                               : fast_synthesis(bands, sink);
}

}  // namespace fasthaar
