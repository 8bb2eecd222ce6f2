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

// Multi-level decomposition: the single-level analysis iterated on the
// approximation band. This is an extension of the one-level filter bank.

#pragma once

#include <cstddef>
#include <vector>

#include "fasthaar/signal.hpp"

namespace fasthaar {

struct DecompositionTree {
  std::size_t levels = 0;
  std::vector<Signal> details;  // finest first; details[j] has N / 2^(j+1)
  Signal final_approx;          // N / 2^levels
  std::size_t original_length = 0;

  // Throws kMalformedTree if any length invariant is broken.
  void validate() const;
};

// Throws kInvalidLevels for levels < 1, kInsufficientLength when the
// length is not a positive multiple of 2^levels.
DecompositionTree decompose(const Signal& x, std::size_t levels, Mode mode,
                            ArithmeticSink* sink = nullptr);

Signal reconstruct(const DecompositionTree& tree, Mode mode,
                   ArithmeticSink* sink = nullptr);

}  // namespace fasthaar
