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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "locohgp/hgp/product.hpp"

namespace locohgp::metrics {

struct Point3 {
    int64_t x = 0;
    int64_t y = 0;
    int64_t z = 0;
    auto operator<=>(const Point3&) const = default;
};

struct Dims {
    size_t width = 0;
    size_t height = 0;
    size_t depth = 0;
    bool operator==(const Dims&) const = default;
};

/// Integer embedding of a (patch, grid, repetition) product.
///
/// Bit/bit qubit (i, j) sits at (cell_i, 2j) and check/check qubit (a, b) at
/// (anchor_a, 2b + 1). X check (a, j) is placed at (anchor_a, 2j), Z check
/// (i, b) at (cell_i, 2b + 1). Without interleaving the check/check block is
/// moved width + 1 cells along x, giving two side-by-side patches.
///
/// Distances are Chebyshev. Within one block, axes that wrap on the grid use
/// the minimum image.
struct LayoutReport {
    bool interleaved = true;
    Dims bitbit_dims;
    Dims checkcheck_dims;
    std::vector<Point3> qubit_coordinates;
    std::vector<Point3> x_check_coordinates;
    std::vector<Point3> z_check_coordinates;
    size_t locality_radius = 0;
    bool injective = false;
    std::vector<std::string> notes;
};

/// Throws NoGeometry when the code has no patch provenance.
LayoutReport layout(const hgp::CssCode& c, bool interleave);

}  // namespace locohgp::metrics
