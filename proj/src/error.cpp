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

#include "fasthaar/error.hpp"

namespace fasthaar {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kOddLength: return "OddLength";
    case Errc::kEmptySignal: return "EmptySignal";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kNonFiniteValue: return "NonFiniteValue";
    case Errc::kInsufficientLength: return "InsufficientLength";
    case Errc::kInvalidLevels: return "InvalidLevels";
    case Errc::kMalformedTree: return "MalformedTree";
    case Errc::kOddDimension: return "OddDimension";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kFileNotFound: return "FileNotFound";
    case Errc::kParseError: return "ParseError";
    case Errc::kIoError: return "IoError";
    case Errc::kUnsupportedFormat: return "UnsupportedFormat";
    case Errc::kMalformedHeader: return "MalformedHeader";
    case Errc::kTruncatedData: return "TruncatedData";
    case Errc::kEmptySeries: return "EmptySeries";
  }
  return "Unknown";
}

bool is_domain_error(Errc code) noexcept {
  switch (code) {
    case Errc::kOddLength:
    case Errc::kEmptySignal:
    case Errc::kLengthMismatch:
    case Errc::kInsufficientLength:
    case Errc::kInvalidLevels:
    case Errc::kMalformedTree:
    case Errc::kOddDimension:
    case Errc::kDimensionMismatch:
    case Errc::kEmptySeries:
      return true;
    default:
      return false;
  }
}

}  // namespace fasthaar
