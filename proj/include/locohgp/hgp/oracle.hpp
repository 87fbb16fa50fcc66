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

#include "locohgp/gf2/distance.hpp"
#include "locohgp/hgp/product.hpp"

namespace locohgp::hgp {

/// Brute-force CSS distances, independent of the product formulas.
struct OracleDistances {
    /// min weight over ker(hz) \ rowspace(hx)
    gf2::DistanceResult dx;
    /// min weight over ker(hx) \ rowspace(hz)
    gf2::DistanceResult dz;
};

constexpr size_t kDefaultOracleBudget = 22;

/// Enumerates every vector of each kernel by Gray code. Row-space membership
/// is decided once, by building each kernel basis as (independent checks of
/// the other type) followed by logical completions: a combination is trivial
/// iff it uses no completion vector. Throws BudgetExceeded when either kernel
/// dimension exceeds dim_budget.
OracleDistances distance_oracle_small(const CssCode& c, size_t dim_budget = kDefaultOracleBudget);

/// Kernel dimensions (dim ker hx, dim ker hz), for budgeting oracle calls.
std::pair<size_t, size_t> kernel_dimensions(const CssCode& c);

}  // namespace locohgp::hgp
