// Copyright 2026 The Kasteleyn Signs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized self-check suites behind `kasteleyn verify`.

#ifndef KASTELEYN_VERIFY_H_
#define KASTELEYN_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace kasteleyn {

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  int trials = 200;
  // Deliberately corrupts each suite's check so the harness can be shown to
  // catch failures.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
  // Stable multi-line text, identical for identical options.
  std::string ToString() const;
};

VerifyReport RunVerify(const VerifyOptions& options);

}  // namespace kasteleyn

#endif  // KASTELEYN_VERIFY_H_
