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
#include <optional>
#include <string>
#include <vector>

#include "locohgp/lattice/summary.hpp"
#include "locohgp/lattice/translational.hpp"

namespace locohgp::io {

/// Which published ranking an entry belongs to.
enum class ReferenceGroup { BestKd2n, BestRatios };

/// A published code entry, transcribed verbatim.
struct ReferenceEntry {
    ReferenceGroup group;
    std::string patch;
    size_t width = 0;
    size_t height = 0;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    size_t quantum_n = 0;
    size_t quantum_k = 0;
    size_t quantum_d = 0;
    size_t w = 0;
    size_t q = 0;
    /// Printed 3-decimal values; empty where not printed.
    std::string kd2n;
    std::string kn;
    std::string dn;
};

const std::vector<ReferenceEntry>& reference_entries();

/// First entry with this patch string and (if given) stated grid.
std::optional<ReferenceEntry> find_reference(const std::string& patch, size_t width = 0, size_t height = 0);

/// Grid and orientation at which a builder reproduces the entry's classical
/// triple, trying the stated grid then its transpose, Natural before
/// Transposed orientation.
struct ResolvedEntry {
    lattice::GridSpec grid;
    bool swapped = false;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    bool d_exact = false;
    bool matched = false;
};

/// Builds the entry's classical code at each candidate (grid, orientation)
/// under the given boundary and returns the first whose [n, k, d] equals the
/// published triple, or the last candidate tried with matched = false.
/// Candidates with k different from the published value skip the distance.
ResolvedEntry resolve_entry(const ReferenceEntry& e, lattice::Boundary boundary,
                            const lattice::DistanceBudget& budget = {});

}  // namespace locohgp::io
