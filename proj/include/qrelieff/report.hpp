// Copyright 2026 The QReliefF Authors
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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qrelieff/pipeline.hpp"
#include "qrelieff/relieff.hpp"

namespace qrelieff {

inline constexpr int kReportSchemaVersion = 1;

struct RunReport {
  nlohmann::json config;
  const Dataset* dataset = nullptr;
  double tau = 0.5;
  bool emit_iterations = false;
  std::optional<RunResult> classical;
  std::optional<QuantumRunResult> quantum;
  // Wall-clock seconds per phase; only written when non-empty.
  std::vector<std::pair<std::string, double>> timings;
};

nlohmann::json report_to_json(const RunReport& report);

// The report minus its "timing" member, serialized with two-space indent.
// Identical inputs and flags give identical bytes.
std::string canonical_body(const nlohmann::json& report);

// Plain-text rendering: one WT row per iteration, then the averaged weights
// and the selected features.
std::string render_text(const nlohmann::json& report);

}  // namespace qrelieff
