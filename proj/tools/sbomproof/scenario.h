// Copyright 2026 The sbomproof Authors.
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

#ifndef SBOMPROOF_TOOLS_SCENARIO_H_
#define SBOMPROOF_TOOLS_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbomproof::cli {

// One scripted party action and what came of it.
struct ScenarioStep {
  std::string actor;
  std::string action;
  int exit_code = 0;
  // "Accept", "RootMismatch", "NonCompliantStep(2)", "ok", ...
  std::string outcome;
};

struct ScenarioReport {
  std::string name;
  std::string expected;  // "Valid" | "Invalid"
  std::string actual;
  std::vector<ScenarioStep> steps;

  bool matches() const { return expected == actual; }
  // Deterministic JSON (no paths, no timings).
  std::string ToJson() const;
};

// Runs one lifecycle script (s1..s4) end to end through the CLI commands,
// writing every input and output under `out_dir`. UsageError for an unknown
// name.
ScenarioReport RunScenario(const std::string& name, const std::string& out_dir,
                           std::optional<std::uint64_t> seed);

}  // namespace sbomproof::cli

#endif  // SBOMPROOF_TOOLS_SCENARIO_H_
