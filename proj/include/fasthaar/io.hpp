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

// Signal CSV and Netpbm graymap readers/writers.
//
// CSV: UTF-8, one value per line, '#' comment lines and blank lines are
// skipped, '.' is the only decimal separator. Values are written with 17
// significant digits in shortest general form ("%.17g" style, e.g. "1",
// "0.29999999999999999"), which reads back bit-identical.
//
// PGM: P2 and P5 with maxval <= 255 are read; output is always P5, maxval
// 255, pixels rounded half away from zero then clamped to [0, 255].

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fasthaar/image2d.hpp"
#include "fasthaar/signal.hpp"

namespace fasthaar::io {

Signal parse_signal_csv(std::string_view text);
std::string format_signal_csv(const Signal& x);

Signal read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(const Signal& x, const std::filesystem::path& path);

GrayImage parse_pgm(std::string_view bytes);
std::string format_pgm(const GrayImage& img);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

// Whole-file helpers; throw kFileNotFound / kIoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace fasthaar::io
