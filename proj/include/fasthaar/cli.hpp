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

// Command-line front end. Subcommands: analyze, synthesize, roundtrip,
// compare, bench, image, version.
//
// Exit codes: 0 success, 1 domain error or failed numerical check,
// 2 I/O, parse or usage error. Diagnostics go to `err` as one line:
//   fasthaar: error: <Kind>: <message>

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fasthaar::cli {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fasthaar::cli
