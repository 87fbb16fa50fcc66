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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace locohgp::lattice {

/// Position inside the 3x3 block
///
///     a b c
///     d e f
///     g h i
///
/// letter index i maps to row i / 3, column i % 3.
struct Offset {
    int row = 0;
    int col = 0;
    auto operator<=>(const Offset&) const = default;
};

/// A nonempty subset of the 3x3 block, written as an alphabetically ordered
/// string over a..i. Stored as a 9-bit mask (bit i = letter 'a' + i).
class GeneratorPatch {
   public:
    /// Throws MalformedPatch for empty strings, letters outside a..i, or
    /// letters that are repeated or out of order.
    static GeneratorPatch parse(std::string_view letters);
    /// mask must be in [1, 511].
    static GeneratorPatch from_mask(uint16_t mask);
    /// Cells must lie in {0,1,2}^2.
    static GeneratorPatch from_offsets(const std::vector<Offset>& cells);

    uint16_t mask() const { return mask_; }
    std::string letters() const;
    /// Offsets in letter order.
    std::vector<Offset> offsets() const;
    size_t weight() const;

    /// Bounding-box extents (1..3).
    int row_extent() const;
    int col_extent() const;

    bool operator==(const GeneratorPatch&) const = default;

   private:
    explicit GeneratorPatch(uint16_t mask) : mask_(mask) {}
    uint16_t mask_;
};

/// Translates the patch so its minimum row and column are both zero.
/// Idempotent; preserves every code parameter on every grid.
GeneratorPatch canonicalize(const GeneratorPatch& p);

/// Point reflection through the origin, canonicalized. Under a periodic
/// boundary the check matrix of the result is a row/column permutation of
/// the transpose of the original's.
GeneratorPatch transpose_patch(const GeneratorPatch& p);

/// Reflection across the main diagonal (row <-> col).
GeneratorPatch diagonal_reflection(const GeneratorPatch& p);

}  // namespace locohgp::lattice
