// Copyright 2026 The affsteiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affsteiner::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitInternal = 3,
};

struct RunConfig {
  int m = 0;
  int e = 2;
  std::string m_list;        // report: comma-separated m values
  std::string e_rule = "2";  // report: a number or "all"
  std::size_t guard = 22;
  unsigned shards = 64;
  std::string out;
  std::string format = "text";
  std::string method = "all";
  std::string side = "dual";
  std::uint64_t seed = 1;
  std::map<int, std::uint32_t> field_polys;  // m -> primitive polynomial
};

/// key=value lines; blank lines and lines starting with '#' are ignored.
/// Throws std::invalid_argument on a line without '='.
std::map<std::string, std::string> parse_config(std::istream& is);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affsteiner::cli
