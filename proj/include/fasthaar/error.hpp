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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fasthaar {

enum class Errc {
  kOddLength,
  kEmptySignal,
  kLengthMismatch,
  kNonFiniteValue,
  kInsufficientLength,
  kInvalidLevels,
  kMalformedTree,
  kOddDimension,
  kDimensionMismatch,
  kFileNotFound,
  kParseError,
  kIoError,
  kUnsupportedFormat,
  kMalformedHeader,
  kTruncatedData,
  kEmptySeries,
};

// Stable identifier used in CLI diagnostics, e.g. "OddLength".
std::string_view errc_name(Errc code) noexcept;

// Domain errors are caller mistakes about the data (exit code 1); the rest
// are I/O or parse failures (exit code 2).
bool is_domain_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fasthaar
