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

// Separable one-level 2-D Haar transform: rows first, then columns.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fasthaar/signal.hpp"

namespace fasthaar {

// Row-major real-valued image. Dimensions are positive, pixels finite.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::vector<double> pixels);
  GrayImage(std::size_t width, std::size_t height, double fill);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const std::vector<double>& pixels() const noexcept { return pixels_; }

  double at(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> pixels_;
};

// LH: lowpass along rows, highpass along columns. HL: the reverse.
struct QuadSubbands {
  GrayImage ll;
  GrayImage lh;
  GrayImage hl;
  GrayImage hh;
};

// Throws kOddDimension.
QuadSubbands analyze2d(const GrayImage& img, Mode mode,
                       ArithmeticSink* sink = nullptr);

// Columns first, then rows. Throws kDimensionMismatch.
GrayImage synthesize2d(const QuadSubbands& bands, Mode mode,
                       ArithmeticSink* sink = nullptr);

// LL / 2 clamped to [0, 255].
GrayImage lowpass_display(const QuadSubbands& bands);

// Signed pixelwise a - b. Throws kDimensionMismatch.
GrayImage difference_image(const GrayImage& a, const GrayImage& b);

// Diagonal gradient over [24, 224] plus uniform noise in [-24, 24), seeded.
// Stand-in for photographic test images.
GrayImage synthetic_image(std::size_t width, std::size_t height,
                          std::uint64_t seed);

}  // namespace fasthaar
