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

#include "locohgp/lattice/translational.hpp"

#include <algorithm>
#include <charconv>

#include "locohgp/errors.hpp"

namespace locohgp::lattice {

std::string_view to_string(Boundary b) {
    switch (b) {
        case Boundary::Periodic:
            return "periodic";
        case Boundary::Cylinder:
            return "cylinder";
        case Boundary::Open:
            return "open";
    }
    return "?";
}

std::string_view to_string(Orientation o) {
    return o == Orientation::Natural ? "natural" : "transposed";
}

Boundary parse_boundary(std::string_view s) {
    if (s == "periodic" || s == "torus") {
        return Boundary::Periodic;
    }
    if (s == "cylinder") {
        return Boundary::Cylinder;
    }
    if (s == "open") {
        return Boundary::Open;
    }
    throw ValidationError("unknown boundary '" + std::string(s) + "' (periodic|cylinder|open)");
}

Orientation parse_orientation(std::string_view s) {
    if (s == "natural") {
        return Orientation::Natural;
    }
    if (s == "transposed") {
        return Orientation::Transposed;
    }
    throw ValidationError("unknown orientation '" + std::string(s) + "' (natural|transposed)");
}

std::string GridSpec::label() const {
    return std::to_string(width) + "x" + std::to_string(height);
}

GridSpec parse_grid(std::string_view s, Boundary boundary, Orientation orientation) {
    auto sep = s.find_first_of("xX");
    auto parse_dim = [&](std::string_view part) {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || value == 0) {
            throw ValidationError("grid must look like WxH with positive integers, got '" + std::string(s) + "'");
        }
        return value;
    };
    if (sep == std::string_view::npos) {
        throw ValidationError("grid must look like WxH, got '" + std::string(s) + "'");
    }
    return GridSpec{parse_dim(s.substr(0, sep)), parse_dim(s.substr(sep + 1)), boundary, orientation};
}

std::vector<Cell> displacements(const GeneratorPatch& p, Orientation o) {
    std::vector<Cell> out;
    GeneratorPatch canon = canonicalize(p);
    for (const Offset& off : canon.offsets()) {
        size_t row = static_cast<size_t>(off.row);
        size_t col = static_cast<size_t>(off.col);
        out.push_back(o == Orientation::Natural ? Cell{col, row} : Cell{row, col});
    }
    return out;
}

namespace {

struct Extent {
    size_t x;
    size_t y;
};

Extent extent_of(const std::vector<Cell>& disp) {
    Extent e{0, 0};
    for (const Cell& c : disp) {
        e.x = std::max(e.x, c.x + 1);
        e.y = std::max(e.y, c.y + 1);
    }
    return e;
}

}  // namespace

void check_grid(const GeneratorPatch& p, const GridSpec& g) {
    Extent e = extent_of(displacements(p, g.orientation));
    if (g.width < e.x || g.height < e.y) {
        throw GridTooSmall("grid " + g.label() + " is smaller than the " + std::to_string(e.x) + "x" +
                           std::to_string(e.y) + " extent of patch \"" + p.letters() + "\"");
    }
}

std::vector<Cell> check_anchors(const GeneratorPatch& p, const GridSpec& g) {
    check_grid(p, g);
    Extent e = extent_of(displacements(p, g.orientation));
    const bool wrap_x = g.boundary != Boundary::Open;
    const bool wrap_y = g.boundary == Boundary::Periodic;
    const size_t nx = wrap_x ? g.width : g.width - e.x + 1;
    const size_t ny = wrap_y ? g.height : g.height - e.y + 1;
    std::vector<Cell> anchors;
    anchors.reserve(nx * ny);
    for (size_t y = 0; y < ny; y++) {
        for (size_t x = 0; x < nx; x++) {
            anchors.push_back({x, y});
        }
    }
    return anchors;
}

gf2::BitMatrix build_translational(const GeneratorPatch& p, const GridSpec& g) {
    std::vector<Cell> anchors = check_anchors(p, g);
    std::vector<Cell> disp = displacements(p, g.orientation);
    gf2::BitMatrix h(anchors.size(), g.cells());
    for (size_t r = 0; r < anchors.size(); r++) {
        for (const Cell& d : disp) {
            size_t x = (anchors[r].x + d.x) % g.width;
            size_t y = (anchors[r].y + d.y) % g.height;
            h.set(r, y * g.width + x);
        }
    }
    return h;
}

gf2::BitMatrix repetition_check_matrix(size_t length) {
    if (length < 2) {
        throw LengthTooSmall("repetition code length must be at least 2, got " + std::to_string(length));
    }
    gf2::BitMatrix h(length - 1, length);
    for (size_t i = 0; i + 1 < length; i++) {
        h.set(i, i);
        h.set(i, i + 1);
    }
    return h;
}

gf2::BitMatrix fibonacci_code(size_t size) {
    if (size < 4) {
        throw SizeTooSmall("Fibonacci code size must be at least 4, got " + std::to_string(size));
    }
    const size_t l = size;
    gf2::BitMatrix h(l * (l - 1), l * l);
    auto bit = [l](size_t x, size_t y) { return y * l + x; };
    for (size_t y = 1; y < l; y++) {
        for (size_t x = 0; x < l; x++) {
            size_t r = (y - 1) * l + x;
            h.set(r, bit(x, y));
            h.set(r, bit((x + l - 1) % l, y - 1));
            h.set(r, bit(x, y - 1));
            h.set(r, bit((x + 1) % l, y - 1));
        }
    }
    return h;
}

}  // namespace locohgp::lattice
