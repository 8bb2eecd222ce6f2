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

#include "fasthaar/signal.hpp"

#include <cmath>
#include <string>

#include "fasthaar/error.hpp"

namespace fasthaar {

namespace {

void check_finite(const std::vector<double>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw Error(Errc::kNonFiniteValue,
                  "non-finite sample at index " + std::to_string(i));
    }
  }
}

}  // namespace

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  check_finite(samples_);
}

Signal::Signal(std::initializer_list<double> samples) : samples_(samples) {
  check_finite(samples_);
}

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::kDirect ? "direct" : "fast";
}

}  // namespace fasthaar
