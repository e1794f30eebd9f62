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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affsteiner/wdist.hpp"
#include "json.hpp"

namespace affsteiner {

/// One line of the reproduction report. Each value column holds a decimal
/// value, "skipped" (too large under the current guard) or "-" (no such
/// route). status is OK, MISMATCH or INFO.
struct ReportRow {
  int m = 0;
  int e = 0;
  std::string section;
  std::string quantity;
  std::string closed_form;
  std::string macwilliams;
  std::string empirical;
  std::string status;
};

struct ReportOptions {
  EnumOptions enumeration;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> primitive_poly;
  /// Largest m for which codes are built and the code-side expansion is
  /// evaluated in full.
  int max_build_m = 12;
};

/// All report rows for one (m, e): code parameters, the dual weight table,
/// low code weights, dual design indices, the Steiner system, the weight-6/8
/// designs, the Assmus-Mattson hypothesis and an affine-invariance spot check.
std::vector<ReportRow> build_report(int m, int e, const ReportOptions& options);

bool all_ok(const std::vector<ReportRow>& rows);
std::string render_markdown(const std::vector<ReportRow>& rows);
nlohmann::ordered_json render_json(const std::vector<ReportRow>& rows);

}  // namespace affsteiner
