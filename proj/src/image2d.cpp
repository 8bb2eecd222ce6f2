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

#include "fasthaar/image2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"
#include "fasthaar/random.hpp"

namespace fasthaar {

namespace {

std::string dims(const GrayImage& img) {
  return std::to_string(img.width()) + "x" + std::to_string(img.height());
}

std::vector<double> row_of(const GrayImage& img, std::size_t y) {
  const auto first = img.pixels().begin() + static_cast<std::ptrdiff_t>(y * img.width());
  return {first, first + static_cast<std::ptrdiff_t>(img.width())};
}

std::vector<double> column_of(const GrayImage& img, std::size_t x) {
  std::vector<double> col(img.height());
  for (std::size_t y = 0; y < img.height(); ++y) col[y] = img.at(x, y);
  return col;
}

struct HalfImages {
  GrayImage low;
  GrayImage high;
};

HalfImages analyze_rows(const GrayImage& img, Mode mode, ArithmeticSink* sink) {
  const std::size_t half = img.width() / 2;
  std::vector<double> low(half * img.height());
  std::vector<double> high(half * img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    const auto bands = analyze(Signal(row_of(img, y)), mode, sink);
    std::copy(bands.approx.begin(), bands.approx.end(), low.begin() + static_cast<std::ptrdiff_t>(y * half));
    std::copy(bands.detail.begin(), bands.detail.end(), high.begin() + static_cast<std::ptrdiff_t>(y * half));
  }
  return {GrayImage(half, img.height(), std::move(low)),
          GrayImage(half, img.height(), std::move(high))};
}

HalfImages analyze_columns(const GrayImage& img, Mode mode,
                           ArithmeticSink* sink) {
  const std::size_t half = img.height() / 2;
  std::vector<double> low(img.width() * half);
  std::vector<double> high(img.width() * half);
  for (std::size_t x = 0; x < img.width(); ++x) {
    const auto bands = analyze(Signal(column_of(img, x)), mode, sink);
    for (std::size_t y = 0; y < half; ++y) {
      low[y * img.width() + x] = bands.approx[y];
      high[y * img.width() + x] = bands.detail[y];
    }
  }
  return {GrayImage(img.width(), half, std::move(low)),
          GrayImage(img.width(), half, std::move(high))};
}

GrayImage synthesize_columns(const GrayImage& low, const GrayImage& high,
                             Mode mode, ArithmeticSink* sink) {
  const std::size_t height = 2 * low.height();
  std::vector<double> out(low.width() * height);
  for (std::size_t x = 0; x < low.width(); ++x) {
    const auto col = synthesize({Signal(column_of(low, x)),
                                 Signal(column_of(high, x))},
                                mode, sink);
    for (std::size_t y = 0; y < height; ++y) out[y * low.width() + x] = col[y];
  }
  return GrayImage(low.width(), height, std::move(out));
}

GrayImage synthesize_rows(const GrayImage& low, const GrayImage& high,
                          Mode mode, ArithmeticSink* sink) {
  const std::size_t width = 2 * low.width();
  std::vector<double> out(width * low.height());
  for (std::size_t y = 0; y < low.height(); ++y) {
    const auto row = synthesize({Signal(row_of(low, y)), Signal(row_of(high, y))},
                                mode, sink);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(y * width));
  }
  return GrayImage(width, low.height(), std::move(out));
}

bool same_dims(const GrayImage& a, const GrayImage& b) {
  return a.width() == b.width() && a.height() == b.height();
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw Error(Errc::kDimensionMismatch, "image dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw Error(Errc::kDimensionMismatch,
                "expected " + std::to_string(width * height) + " pixels, got " +
                    std::to_string(pixels_.size()));
  }
  for (double p : pixels_) {
    if (!std::isfinite(p)) throw Error(Errc::kNonFiniteValue, "non-finite pixel");
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, double fill)
    : GrayImage(width, height, std::vector<double>(width * height, fill)) {}

QuadSubbands analyze2d(const GrayImage& img, Mode mode, ArithmeticSink* sink) {
  if (img.width() % 2 != 0 || img.height() % 2 != 0) {
    throw Error(Errc::kOddDimension,
                "2-D analysis needs even dimensions, got " + dims(img));
  }
  const auto rows = analyze_rows(img, mode, sink);
  auto low = analyze_columns(rows.low, mode, sink);
  auto high = analyze_columns(rows.high, mode, sink);
  return {std::move(low.low), std::move(low.high), std::move(high.low),
          std::move(high.high)};
}

GrayImage synthesize2d(const QuadSubbands& bands, Mode mode,
                       ArithmeticSink* sink) {
  if (!same_dims(bands.ll, bands.lh) || !same_dims(bands.ll, bands.hl) ||
      !same_dims(bands.ll, bands.hh)) {
    throw Error(Errc::kDimensionMismatch,
                "subband dimensions differ: " + dims(bands.ll) + ", " +
                    dims(bands.lh) + ", " + dims(bands.hl) + ", " +
                    dims(bands.hh));
  }
  const auto low = synthesize_columns(bands.ll, bands.lh, mode, sink);
  const auto high = synthesize_columns(bands.hl, bands.hh, mode, sink);
  return synthesize_rows(low, high, mode, sink);
}

GrayImage lowpass_display(const QuadSubbands& bands) {
  std::vector<double> out(bands.ll.pixels().size());
  std::transform(bands.ll.pixels().begin(), bands.ll.pixels().end(),
                 out.begin(),
                 [](double v) { return std::clamp(v * 0.5, 0.0, 255.0); });
  return GrayImage(bands.ll.width(), bands.ll.height(), std::move(out));
}

GrayImage difference_image(const GrayImage& a, const GrayImage& b) {
  if (!same_dims(a, b)) {
    throw Error(Errc::kDimensionMismatch,
                "cannot subtract " + dims(b) + " from " + dims(a));
  }
  std::vector<double> out(a.pixels().size());
  std::transform(a.pixels().begin(), a.pixels().end(), b.pixels().begin(),
                 out.begin(), std::minus<>());
  return GrayImage(a.width(), a.height(), std::move(out));
}

GrayImage synthetic_image(std::size_t width, std::size_t height,
                          std::uint64_t seed) {
  Xoshiro256 rng(seed);
  const double span = static_cast<double>(width + height - 2);
  std::vector<double> pixels(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double ramp = span > 0 ? static_cast<double>(x + y) / span : 0.0;
      pixels[y * width + x] = 24.0 + 200.0 * ramp + 24.0 * rng.symmetric();
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

}  // namespace fasthaar
