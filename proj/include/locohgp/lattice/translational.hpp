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
#include <string>
#include <string_view>
#include <vector>

#include "locohgp/gf2/bit_matrix.hpp"
#include "locohgp/lattice/patch.hpp"

namespace locohgp::lattice {

/// How translates of the patch meet the grid edge.
///
///   Periodic  wrap on both axes (torus); one check per cell.
///   Cylinder  wrap along the width, open along the height; one check per
///             anchor whose support fits vertically. This is the automaton
///             form that reproduces the published tables.
///   Open      no wrap; only translates fully inside the grid.
enum class Boundary { Periodic, Cylinder, Open };

/// Natural maps patch offset (row, col) to grid displacement (dy, dx) =
/// (row, col); Transposed maps it to (col, row).
enum class Orientation { Natural, Transposed };

std::string_view to_string(Boundary b);
std::string_view to_string(Orientation o);
Boundary parse_boundary(std::string_view s);
Orientation parse_orientation(std::string_view s);

struct GridSpec {
    size_t width = 3;
    size_t height = 3;
    Boundary boundary = Boundary::Cylinder;
    Orientation orientation = Orientation::Natural;

    size_t cells() const { return width * height; }
    /// "WxH"
    std::string label() const;
};

/// Parses "WxH" (first number is the width).
GridSpec parse_grid(std::string_view s, Boundary boundary = Boundary::Cylinder,
                    Orientation orientation = Orientation::Natural);

struct Cell {
    size_t x = 0;
    size_t y = 0;
    bool operator==(const Cell&) const = default;
};

/// Grid displacements of the patch after orientation mapping, shifted so the
/// minimum dy and dx are zero.
std::vector<Cell> displacements(const GeneratorPatch& p, Orientation o);

/// Throws GridTooSmall unless width and height cover the oriented patch's
/// bounding box.
void check_grid(const GeneratorPatch& p, const GridSpec& g);

/// Translational check matrix. Column index of cell (x, y) is y * width + x.
/// Rows are ordered by anchor, y-major; the check anchored at (x, y) covers
/// (x + dx, y + dy) for every displacement, wrapped on periodic axes. Every
/// row has weight p.weight().
gf2::BitMatrix build_translational(const GeneratorPatch& p, const GridSpec& g);

/// Anchor cell of each row of build_translational(p, g), same order.
std::vector<Cell> check_anchors(const GeneratorPatch& p, const GridSpec& g);

/// (length - 1) x length, rows e_i + e_{i+1}. Throws LengthTooSmall for
/// length < 2.
gf2::BitMatrix repetition_check_matrix(size_t length);

/// Weight-4 automaton code on an l x l array, periodic horizontally: one check
/// per cell (x, y) with y >= 1 coupling b(x,y), b(x-1,y-1), b(x,y-1) and
/// b(x+1,y-1). Rows ordered by (y - 1) * l + x. Throws SizeTooSmall for l < 4.
gf2::BitMatrix fibonacci_code(size_t size);

}  // namespace locohgp::lattice
