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

#include "fasthaar/multilevel.hpp"

#include <limits>
#include <string>

#include "fasthaar/error.hpp"
#include "fasthaar/haar.hpp"

namespace fasthaar {

namespace {

void malformed(const std::string& what) {
  throw Error(Errc::kMalformedTree, what);
}

}  // namespace

void DecompositionTree::validate() const {
  if (levels < 1) malformed("tree has no levels");
  if (details.size() != levels) {
    malformed("tree lists " + std::to_string(details.size()) +
              " detail bands for " + std::to_string(levels) + " levels");
  }
  if (levels >= std::numeric_limits<std::size_t>::digits) {
    malformed("level count too large");
  }
  const std::size_t block = std::size_t{1} << levels;
  if (original_length == 0 || original_length % block != 0) {
    malformed("original length " + std::to_string(original_length) +
              " is not a positive multiple of 2^" + std::to_string(levels));
  }
  for (std::size_t j = 0; j < levels; ++j) {
    const std::size_t expected = original_length >> (j + 1);
    if (details[j].size() != expected) {
      malformed("detail band " + std::to_string(j) + " has length " +
                std::to_string(details[j].size()) + ", expected " +
                std::to_string(expected));
    }
  }
  if (final_approx.size() != original_length / block) {
    malformed("final approximation has length " +
              std::to_string(final_approx.size()) + ", expected " +
              std::to_string(original_length / block));
  }
}

DecompositionTree decompose(const Signal& x, std::size_t levels, Mode mode,
                            ArithmeticSink* sink) {
  if (levels < 1) throw Error(Errc::kInvalidLevels, "levels must be >= 1");
  const std::size_t n = x.size();
  if (levels >= std::numeric_limits<std::size_t>::digits || n == 0 ||
      n % (std::size_t{1} << levels) != 0) {
    throw Error(Errc::kInsufficientLength,
                "length " + std::to_string(n) +
                    " is not a positive multiple of 2^" +
                    std::to_string(levels));
  }

  DecompositionTree tree;
  tree.levels = levels;
  tree.original_length = n;
  tree.details.reserve(levels);

  Signal current = x;
  for (std::size_t j = 0; j < levels; ++j) {
    auto bands = analyze(current, mode, sink);
    tree.details.push_back(std::move(bands.detail));
    current = std::move(bands.approx);
  }
  tree.final_approx = std::move(current);
  return tree;
}

Signal reconstruct(const DecompositionTree& tree, Mode mode,
                   ArithmeticSink* sink) {
  tree.validate();
  Signal current = tree.final_approx;
  for (std::size_t j = tree.levels; j-- > 0;) {
    current = synthesize({std::move(current), tree.details[j]}, mode, sink);
  }
  return current;
}

}  // namespace fasthaar
