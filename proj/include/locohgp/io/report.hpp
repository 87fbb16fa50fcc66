// Copyright 2026 The locohgp Authors
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
#include <vector>

#include <json.hpp>

#include "locohgp/explorer/discrepancy.hpp"
#include "locohgp/explorer/search.hpp"
#include "locohgp/io/reference_table.hpp"

namespace locohgp::io {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
    metrics::Metric metric = metrics::Metric::KD2N;
    /// Echoed verbatim under "config" when set.
    std::optional<nlohmann::ordered_json> config;
    /// Maximum number of records to emit; 0 emits all.
    size_t limit = 0;
    /// Attach discrepancy data for records matching a published entry.
    bool discrepancies = true;
};

/// `"bdg"_{3x4}[12,6,3] -> [[48,6,3]] 0.125` with the chosen metric.
std::string row_text(const explorer::SearchRecord& r, metrics::Metric metric);

nlohmann::ordered_json record_json(const explorer::SearchRecord& r, metrics::Metric metric);
nlohmann::ordered_json config_json(const explorer::SearchConfig& cfg);
nlohmann::ordered_json discrepancy_json(const explorer::DiscrepancyReport& d);

/// Report document: tool, version, metric, conventions, optional config
/// echo, row count and records in the given order.
nlohmann::ordered_json emit_report(const std::vector<explorer::SearchRecord>& records,
                                   const ReportOptions& options = {});

/// Reproduces every published entry: resolves grid and orientation, builds
/// the product at the published repetition length and classifies the
/// published quantum length.
nlohmann::ordered_json reference_report(lattice::Boundary boundary, hgp::RowPolicy policy,
                                        const lattice::DistanceBudget& budget);

}  // namespace locohgp::io
