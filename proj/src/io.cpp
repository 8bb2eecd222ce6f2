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

#include "fasthaar/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "fasthaar/error.hpp"

namespace fasthaar::io {

namespace {

constexpr std::string_view kBlank = " \t\r\v\f";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Netpbm header tokenizer: whitespace separated, '#' to end of line.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view token() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) &&
           bytes_[pos_] != '#') {
      ++pos_;
    }
    return bytes_.substr(start, pos_ - start);
  }

  unsigned long number(const char* what) {
    const auto tok = token();
    unsigned long value = 0;
    const auto [end, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Error(Errc::kMalformedHeader,
                  std::string("PGM header: bad ") + what + " '" +
                      std::string(tok) + "'");
    }
    return value;
  }

  // Exactly one whitespace byte separates the header from P5 raster data.
  std::size_t raster_offset() const {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw Error(Errc::kMalformedHeader,
                  "PGM header: missing whitespace before raster");
    }
    return pos_ + 1;
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Signal parse_signal_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw Error(Errc::kNonFiniteValue,
                  "line " + std::to_string(line_no) + ": value out of range '" +
                      std::string(line) + "'");
    }
    if (ec != std::errc() || end != line.data() + line.size()) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                         ": cannot parse '" +
                                         std::string(line) + "'");
    }
    if (!std::isfinite(value)) {
      throw Error(Errc::kNonFiniteValue, "line " + std::to_string(line_no) +
                                             ": non-finite value '" +
                                             std::string(line) + "'");
    }
    values.push_back(value);
  }
  return Signal(std::move(values));
}

std::string format_signal_csv(const Signal& x) {
  std::string out;
  out.reserve(x.size() * 24);
  char buf[64];
  for (double v : x) {
    const auto [end, ec] =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, end);
    out.push_back('\n');
  }
  return out;
}

Signal read_signal_csv(const std::filesystem::path& path) {
  return parse_signal_csv(read_file(path));
}

void write_signal_csv(const Signal& x, const std::filesystem::path& path) {
  write_file(path, format_signal_csv(x));
}

GrayImage parse_pgm(std::string_view bytes) {
  HeaderReader header(bytes);
  const auto magic = header.token();
  if (magic == "P1" || magic == "P3" || magic == "P4" || magic == "P6") {
    throw Error(Errc::kUnsupportedFormat,
                "unsupported Netpbm type " + std::string(magic));
  }
  if (magic != "P2" && magic != "P5") {
    throw Error(Errc::kMalformedHeader, "not a PGM file");
  }
  const auto width = header.number("width");
  const auto height = header.number("height");
  const auto maxval = header.number("maxval");
  if (width == 0 || height == 0) {
    throw Error(Errc::kMalformedHeader, "PGM header: zero dimension");
  }
  if (maxval == 0) throw Error(Errc::kMalformedHeader, "PGM header: maxval 0");
  if (maxval > 255) {
    throw Error(Errc::kUnsupportedFormat,
                "maxval " + std::to_string(maxval) + " exceeds 255");
  }

  const std::size_t count = width * height;
  std::vector<double> pixels;
  pixels.reserve(count);
  if (magic == "P5") {
    const std::size_t offset = header.raster_offset();
    if (bytes.size() < offset + count) {
      throw Error(Errc::kTruncatedData,
                  "P5 raster has " + std::to_string(bytes.size() - std::min(offset, bytes.size())) +
                      " of " + std::to_string(count) + " bytes");
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto v = static_cast<unsigned char>(bytes[offset + i]);
      if (v > maxval) {
        throw Error(Errc::kParseError, "pixel " + std::to_string(i) +
                                           " exceeds maxval");
      }
      pixels.push_back(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const auto tok = header.token();
      if (tok.empty()) {
        throw Error(Errc::kTruncatedData,
                    "P2 raster has " + std::to_string(i) + " of " +
                        std::to_string(count) + " values");
      }
      unsigned long v = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size() || v > maxval) {
        throw Error(Errc::kParseError,
                    "bad P2 pixel '" + std::string(tok) + "'");
      }
      pixels.push_back(static_cast<double>(v));
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::string format_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n";
  out.reserve(out.size() + img.pixels().size());
  for (double p : img.pixels()) {
    const double q = std::clamp(std::round(p), 0.0, 255.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(q)));
  }
  return out;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  return parse_pgm(read_file(path));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  write_file(path, format_pgm(img));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kFileNotFound, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::kIoError, "read failed: " + path.string());
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIoError, "cannot create " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::kIoError, "write failed: " + path.string());
}

}  // namespace fasthaar::io
