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

#include "locohgp/lattice/patch.hpp"

#include <algorithm>
#include <bit>

#include "locohgp/errors.hpp"

namespace locohgp::lattice {

GeneratorPatch GeneratorPatch::parse(std::string_view letters) {
    if (letters.empty()) {
        throw MalformedPatch("patch string is empty");
    }
    uint16_t mask = 0;
    int previous = -1;
    for (char ch : letters) {
        if (ch < 'a' || ch > 'i') {
            throw MalformedPatch("patch letters must be in a..i, got '" + std::string(1, ch) + "'");
        }
        int index = ch - 'a';
        if (index == previous) {
            throw MalformedPatch("patch letter repeated: '" + std::string(1, ch) + "'");
        }
        if (index < previous) {
            throw MalformedPatch("patch letters must be in alphabetical order: \"" + std::string(letters) + "\"");
        }
        previous = index;
        mask |= static_cast<uint16_t>(1u << index);
    }
    return GeneratorPatch(mask);
}

GeneratorPatch GeneratorPatch::from_mask(uint16_t mask) {
    if (mask == 0 || mask >= (1u << 9)) {
        throw MalformedPatch("patch mask must be in [1, 511]");
    }
    return GeneratorPatch(mask);
}

GeneratorPatch GeneratorPatch::from_offsets(const std::vector<Offset>& cells) {
    uint16_t mask = 0;
    for (const Offset& o : cells) {
        if (o.row < 0 || o.row > 2 || o.col < 0 || o.col > 2) {
            throw MalformedPatch("patch offset outside the 3x3 block");
        }
        mask |= static_cast<uint16_t>(1u << (o.row * 3 + o.col));
    }
    return from_mask(mask);
}

std::string GeneratorPatch::letters() const {
    std::string s;
    for (int i = 0; i < 9; i++) {
        if ((mask_ >> i) & 1) {
            s += static_cast<char>('a' + i);
        }
    }
    return s;
}

std::vector<Offset> GeneratorPatch::offsets() const {
    std::vector<Offset> out;
    for (int i = 0; i < 9; i++) {
        if ((mask_ >> i) & 1) {
            out.push_back({i / 3, i % 3});
        }
    }
    return out;
}

size_t GeneratorPatch::weight() const {
    return static_cast<size_t>(std::popcount(mask_));
}

int GeneratorPatch::row_extent() const {
    int lo = 3;
    int hi = -1;
    for (const Offset& o : offsets()) {
        lo = std::min(lo, o.row);
        hi = std::max(hi, o.row);
    }
    return hi - lo + 1;
}

int GeneratorPatch::col_extent() const {
    int lo = 3;
    int hi = -1;
    for (const Offset& o : offsets()) {
        lo = std::min(lo, o.col);
        hi = std::max(hi, o.col);
    }
    return hi - lo + 1;
}

namespace {

GeneratorPatch shifted_to_origin(std::vector<Offset> cells) {
    int min_row = cells.front().row;
    int min_col = cells.front().col;
    for (const Offset& o : cells) {
        min_row = std::min(min_row, o.row);
        min_col = std::min(min_col, o.col);
    }
    for (Offset& o : cells) {
        o.row -= min_row;
        o.col -= min_col;
    }
    return GeneratorPatch::from_offsets(cells);
}

}  // namespace

GeneratorPatch canonicalize(const GeneratorPatch& p) {
    return shifted_to_origin(p.offsets());
}

GeneratorPatch transpose_patch(const GeneratorPatch& p) {
    auto cells = p.offsets();
    for (Offset& o : cells) {
        o = {-o.row, -o.col};
    }
    return shifted_to_origin(std::move(cells));
}

GeneratorPatch diagonal_reflection(const GeneratorPatch& p) {
    auto cells = p.offsets();
    for (Offset& o : cells) {
        o = {o.col, o.row};
    }
    return GeneratorPatch::from_offsets(cells);
}

}  // namespace locohgp::lattice
