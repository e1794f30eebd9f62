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

#include <stdexcept>
#include <string>

namespace affsteiner {

// Usage errors (bad parameters, out-of-scope requests) are reported as
// std::invalid_argument. The two types below separate findings from bugs.

/// An empirical check disagreed with a formula or with another engine.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that can only happen if the implementation itself is wrong,
/// e.g. a minimal polynomial with a coefficient outside GF(2) or a
/// non-exact division inside an identity that must divide exactly.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration refused because the code dimension exceeds the guard.
class GuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace affsteiner
