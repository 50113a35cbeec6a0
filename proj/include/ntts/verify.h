// Copyright 2026 The ntts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Enumerable registry of invariant and oracle checks, shared by
// `ntts verify` and the acceptance binary.

#ifndef NTTS_VERIFY_H_
#define NTTS_VERIFY_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ntts::verify {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string name;       // "<module>.<property>"
  std::string criterion;  // "AC1".."AC13", empty for module-only checks
  std::string summary;
  bool timing = false;  // wall-clock measurement; slow and machine dependent
  std::function<Outcome()> run;
};

struct Result {
  const Check* check = nullptr;
  Outcome outcome;
  double seconds = 0.0;
};

const std::vector<Check>& Registry();

// Names of every acceptance criterion the registry must cover.
std::vector<std::string> Criteria();

struct RunOptions {
  std::string filter;  // substring of the check name; empty runs all
  bool skip_timing = false;
  bool criteria_only = false;
};

// Runs the selected checks in registry order. An exception thrown by a
// check counts as a failure with the message as detail.
std::vector<Result> Run(const RunOptions& options, std::ostream* progress);

Result RunOne(const Check& check);

}  // namespace ntts::verify

#endif  // NTTS_VERIFY_H_
