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

// Single-level 1-D Haar filter bank in two interchangeable forms.
//
// The direct form is the textbook two-channel bank: convolve the input with
// the lowpass and highpass analysis filters at the full input rate, then
// keep every second output. Synthesis zero-stuffs each band, convolves with
// the synthesis filters and sums the branches.
//
// The fast form applies the noble identity. Both Haar filters share one
// constant polyphase component, so the lowpass is
//
//   B0(z) = B00(z^2) + z^-1 B00(z^2),   B00(z) = 1/sqrt(2)
//
// and the highpass only flips the sign of the odd branch. Moving the
// decimator in front of the filters leaves a sum/difference butterfly on
// each (even, odd) input pair followed by a single scale. Synthesis is the
// same butterfly with the upsampler moved to the output, i.e. an interleave.
//
// Decimation keeps odd full-rate indices n = 2k+1, so output k depends on
// the pair (x[2k], x[2k+1]) and both forms compute the same values:
//
//   approx[k] = (x[2k] + x[2k+1]) / sqrt(2)
//   detail[k] = (x[2k] - x[2k+1]) / sqrt(2)

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "fasthaar/signal.hpp"

namespace fasthaar {

// 1/sqrt(2), shared by every implementation so that direct/fast differences
// come only from operation order.
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct HaarFilterSet {
  static constexpr std::size_t kPolyphaseCount = 2;

  std::array<double, 2> analysis_low;
  std::array<double, 2> analysis_high;
  std::array<double, 2> synthesis_low;
  std::array<double, 2> synthesis_high;
  double polyphase_scalar;

  static HaarFilterSet standard() noexcept {
    const double c = kInvSqrt2;
    return {{c, c}, {-c, c}, {c, c}, {c, -c}, c};
  }
};

// even[k] = x[2k], odd[k] = x[2k+1]. Throws kOddLength.
std::pair<Signal, Signal> split_polyphase(const Signal& x);

// Interleaves two phases; inverse of split_polyphase. Throws kLengthMismatch.
Signal merge_polyphase(const Signal& even, const Signal& odd);

// Full-rate convolution then odd-phase decimation. The sink sees the whole
// full-rate cost: 4N multiplications and 2N additions.
SubbandPair direct_analysis(const Signal& x, ArithmeticSink* sink = nullptr);

// Polyphase split then butterfly: N multiplications and N additions.
SubbandPair fast_analysis(const Signal& x, ArithmeticSink* sink = nullptr);

// Zero-stuffing upsampler, both synthesis filters at the full output rate,
// branch sum. For bands of length L: 8L multiplications (zeros included)
// and 6L additions (4L inside the filters, 2L for the branch sum).
Signal direct_synthesis(const SubbandPair& bands, ArithmeticSink* sink = nullptr);

// Butterfly then interleave: 2L multiplications and 2L additions.
Signal fast_synthesis(const SubbandPair& bands, ArithmeticSink* sink = nullptr);

SubbandPair analyze(const Signal& x, Mode mode, ArithmeticSink* sink = nullptr);
Signal synthesize(const SubbandPair& bands, Mode mode,
                  ArithmeticSink* sink = nullptr);

}  // namespace fasthaar
