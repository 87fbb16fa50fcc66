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
#include <optional>
#include <string>
#include <vector>

#include "locohgp/hgp/product.hpp"
#include "locohgp/lattice/patch.hpp"
#include "locohgp/lattice/summary.hpp"
#include "locohgp/lattice/translational.hpp"
#include "locohgp/metrics/merit.hpp"
#include "locohgp/metrics/weights.hpp"

namespace locohgp::explorer {

struct SearchConfig {
    size_t min_grid = 3;
    size_t max_grid = 17;
    size_t min_weight = 1;
    size_t max_weight = 9;
    size_t min_k = 0;
    size_t min_d = 0;
    metrics::Metric metric = metrics::Metric::KD2N;
    size_t k_budget = gf2::kDefaultKBudget;
    uint64_t isd_iterations = 200;
    uint64_t seed = 1;
    lattice::Boundary boundary = lattice::Boundary::Cylinder;
    lattice::Orientation orientation = lattice::Orientation::Natural;
    hgp::RowPolicy row_policy = hgp::RowPolicy::IndependentRows;
    /// Empty selects the repetition length from the classical distance.
    std::optional<size_t> fixed_rep;
    /// When false only k and the weight profile are computed.
    bool compute_distances = true;
    /// Restricts the sweep to these patches (canonicalized) when nonempty.
    std::vector<std::string> patches;

    /// Throws ValidationError for out-of-range fields.
    void validate() const;
};

struct SearchRecord {
    std::string patch;
    lattice::GridSpec grid;
    lattice::ClassicalCodeSummary classical;
    size_t rep_length = 0;
    hgp::QuantumParams quantum;
    metrics::WeightProfile weights;
    metrics::FiguresOfMerit merit;

    /// Both classical and quantum distances are exact.
    bool exact() const;
    /// Distance value used for merits: 0 when infinite or not computed.
    size_t merit_distance() const;
};

/// Nonempty subsets of the 3x3 block within the weight range, shifted to
/// canonical form, deduplicated and sorted by letter string.
std::vector<lattice::GeneratorPatch> enumerate_patches(const SearchConfig& cfg);

/// Grids a sweep visits, in order. Boundaries symmetric under swapping the
/// axes (Periodic, Open) only visit width <= height; the patch set is closed
/// under diagonal reflection so nothing is lost.
std::vector<std::pair<size_t, size_t>> sweep_grids(const SearchConfig& cfg);

/// Seed for one (patch, grid) evaluation, independent of evaluation order.
uint64_t record_seed(uint64_t seed, const lattice::GeneratorPatch& p, const lattice::GridSpec& g);

/// Builds and measures one code. Throws GridTooSmall when p does not fit.
SearchRecord evaluate(const lattice::GeneratorPatch& p, const lattice::GridSpec& grid, const SearchConfig& cfg);

/// Strict weak order for ranking: chosen metric descending, then n, patch
/// string, width, height ascending.
bool ranks_before(const SearchRecord& a, const SearchRecord& b, metrics::Metric metric);

struct SearchResult {
    std::vector<SearchRecord> records;
    size_t evaluated = 0;
    size_t skipped = 0;
    size_t filtered = 0;
};

/// Full sweep, filtered and ranked. The result depends only on cfg.
SearchResult search(const SearchConfig& cfg, size_t jobs = 1);

}  // namespace locohgp::explorer
