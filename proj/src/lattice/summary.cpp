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

#include "locohgp/lattice/summary.hpp"

#include "locohgp/gf2/linalg.hpp"

namespace locohgp::lattice {

uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

gf2::DistanceResult distance_with_dimension(const gf2::BitMatrix& h, size_t k, const DistanceBudget& budget) {
    if (k == 0) {
        return gf2::DistanceResult::infinite();
    }
    if (!budget.compute) {
        gf2::DistanceResult unknown;
        unknown.value = 0;
        unknown.exact = false;
        return unknown;
    }
    if (k <= budget.k_budget) {
        return gf2::min_weight_exact(h, budget.k_budget);
    }
    return gf2::min_weight_isd(h, budget.isd_iterations, budget.seed);
}

}  // namespace

gf2::DistanceResult code_distance(const gf2::BitMatrix& h, const DistanceBudget& budget) {
    return distance_with_dimension(h, h.cols() - gf2::rank(h), budget);
}

std::string ClassicalCodeSummary::triple() const {
    std::string dist = d.value == 0 ? "?" : d.to_string();
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + dist + "]";
}

ClassicalCodeSummary classical_summary(const gf2::BitMatrix& h, const DistanceBudget& budget) {
    ClassicalCodeSummary s;
    s.n = h.cols();
    s.r = h.rows();
    s.rank = gf2::rank(h);
    s.k = s.n - s.rank;
    s.k_t = s.r - s.rank;
    s.check_weight = h.max_row_weight();
    s.bit_degree = h.max_column_weight();
    s.d = distance_with_dimension(h, s.k, budget);
    if (s.k_t > 0) {
        DistanceBudget transpose_budget = budget;
        transpose_budget.seed = mix_seed(budget.seed);
        s.d_t = distance_with_dimension(h.transpose(), s.k_t, transpose_budget);
    }
    return s;
}

}  // namespace locohgp::lattice
