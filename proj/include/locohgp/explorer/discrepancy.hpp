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

#include <cstddef>
#include <string_view>

#include "locohgp/lattice/summary.hpp"

namespace locohgp::explorer {

/// How a published quantum length relates to the classical code.
///   Consistent  implied check count equals rank(H1)
///   KMatching   implied check count equals k1 instead
///   Other       neither
enum class Discrepancy { Consistent, KMatching, Other };

std::string_view to_string(Discrepancy d);

struct DiscrepancyReport {
    size_t published_n = 0;
    size_t published_rep = 0;
    /// (published_n - n1 * L) / (L - 1).
    size_t implied_rows = 0;
    size_t rank = 0;
    size_t k1 = 0;
    /// n1 * L + rank * (L - 1): the length of the product with independent rows.
    size_t computed_n = 0;
    Discrepancy kind = Discrepancy::Other;
};

/// Throws LengthTooSmall for published_rep < 2 and NonIntegerImpliedRows
/// when the implied count is negative or fractional.
DiscrepancyReport discrepancy_report(const lattice::ClassicalCodeSummary& classical, size_t published_n,
                                     size_t published_rep);

}  // namespace locohgp::explorer
