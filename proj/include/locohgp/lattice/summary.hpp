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
#include <cstdint>
#include <string>

#include "locohgp/gf2/bit_matrix.hpp"
#include "locohgp/gf2/distance.hpp"

namespace locohgp::lattice {

/// Controls how classical distances are computed: exhaustively when the
/// kernel dimension is within k_budget, otherwise by information-set search.
struct DistanceBudget {
    size_t k_budget = gf2::kDefaultKBudget;
    uint64_t isd_iterations = 200;
    uint64_t seed = 1;
    /// When false, distances are left uncomputed (value 0, inexact) unless the
    /// kernel is trivial.
    bool compute = true;
};

/// Exact within budget, otherwise min_weight_isd with the budget's seed.
gf2::DistanceResult code_distance(const gf2::BitMatrix& h, const DistanceBudget& budget);

/// [n, k, d] of the code with check matrix H plus the transpose-code data
/// (k_t, d_t) used by the hypergraph-product formulas.
struct ClassicalCodeSummary {
    size_t n = 0;
    size_t k = 0;
    /// Stored row count of H.
    size_t r = 0;
    size_t rank = 0;
    gf2::DistanceResult d;
    /// Dimension of ker(H^T): r - rank.
    size_t k_t = 0;
    gf2::DistanceResult d_t;
    size_t check_weight = 0;
    size_t bit_degree = 0;

    /// "[n,k,d]", with "<=d" for inexact and "inf" for trivial kernels.
    std::string triple() const;
};

ClassicalCodeSummary classical_summary(const gf2::BitMatrix& h, const DistanceBudget& budget = {});

/// splitmix64 finalizer, used to derive independent per-task seeds.
uint64_t mix_seed(uint64_t x);

}  // namespace locohgp::lattice
