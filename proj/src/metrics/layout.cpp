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

#include "locohgp/metrics/layout.hpp"

#include <algorithm>
#include <set>

#include "locohgp/errors.hpp"

namespace locohgp::metrics {
namespace {

struct Frame {
    int64_t width;
    int64_t height;
    bool wrap_x;
    bool wrap_y;
    int64_t shift;  // x offset of the check/check block

    int64_t block(const Point3& p) const { return (shift > 0 && p.x >= shift) ? 1 : 0; }

    int64_t axis(int64_t d, int64_t period, bool wrap) const {
        d = d < 0 ? -d : d;
        return wrap ? std::min(d, period - d) : d;
    }

    int64_t distance(const Point3& a, const Point3& b) const {
        int64_t dz = a.z > b.z ? a.z - b.z : b.z - a.z;
        if (block(a) != block(b)) {
            int64_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
            int64_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
            return std::max({dx, dy, dz});
        }
        return std::max({axis(a.x - b.x, width, wrap_x), axis(a.y - b.y, height, wrap_y), dz});
    }
};

}  // namespace

LayoutReport layout(const hgp::CssCode& c, bool interleave) {
    if (!c.provenance) {
        throw NoGeometry("code has no patch provenance; geometry is undefined");
    }
    const hgp::Provenance& prov = *c.provenance;
    const lattice::GridSpec& g = prov.grid;
    if (c.n1 != g.cells() || c.r1 != prov.anchors.size() || c.n2 != prov.rep_length) {
        throw ValidationError("provenance does not match the product dimensions");
    }

    Frame frame{static_cast<int64_t>(g.width), static_cast<int64_t>(g.height),
                g.boundary != lattice::Boundary::Open, g.boundary == lattice::Boundary::Periodic,
                interleave ? 0 : static_cast<int64_t>(g.width) + 1};

    auto cell = [&](size_t i) {
        return std::pair<int64_t, int64_t>{static_cast<int64_t>(i % g.width), static_cast<int64_t>(i / g.width)};
    };

    LayoutReport out;
    out.interleaved = interleave;
    out.qubit_coordinates.reserve(c.n);
    for (size_t i = 0; i < c.n1; i++) {
        auto [x, y] = cell(i);
        for (size_t j = 0; j < c.n2; j++) {
            out.qubit_coordinates.push_back({x, y, 2 * static_cast<int64_t>(j)});
        }
    }
    size_t min_ax = SIZE_MAX, max_ax = 0, min_ay = SIZE_MAX, max_ay = 0;
    for (size_t a = 0; a < c.r1; a++) {
        const lattice::Cell& anchor = prov.anchors[a];
        min_ax = std::min(min_ax, anchor.x);
        max_ax = std::max(max_ax, anchor.x);
        min_ay = std::min(min_ay, anchor.y);
        max_ay = std::max(max_ay, anchor.y);
        for (size_t b = 0; b < c.r2; b++) {
            out.qubit_coordinates.push_back({static_cast<int64_t>(anchor.x) + frame.shift,
                                             static_cast<int64_t>(anchor.y), 2 * static_cast<int64_t>(b) + 1});
        }
    }

    out.x_check_coordinates.reserve(c.hx.rows());
    for (size_t a = 0; a < c.r1; a++) {
        for (size_t j = 0; j < c.n2; j++) {
            out.x_check_coordinates.push_back({static_cast<int64_t>(prov.anchors[a].x),
                                               static_cast<int64_t>(prov.anchors[a].y), 2 * static_cast<int64_t>(j)});
        }
    }
    out.z_check_coordinates.reserve(c.hz.rows());
    for (size_t i = 0; i < c.n1; i++) {
        auto [x, y] = cell(i);
        for (size_t b = 0; b < c.r2; b++) {
            out.z_check_coordinates.push_back({x, y, 2 * static_cast<int64_t>(b) + 1});
        }
    }

    int64_t radius = 0;
    auto scan = [&](const gf2::SparseBitMatrix& m, const std::vector<Point3>& where) {
        for (size_t r = 0; r < m.rows(); r++) {
            for (uint32_t q : m.row(r)) {
                radius = std::max(radius, frame.distance(where[r], out.qubit_coordinates[q]));
            }
        }
    };
    scan(c.hx, out.x_check_coordinates);
    scan(c.hz, out.z_check_coordinates);
    out.locality_radius = static_cast<size_t>(radius);

    std::set<Point3> seen(out.qubit_coordinates.begin(), out.qubit_coordinates.end());
    out.injective = seen.size() == out.qubit_coordinates.size();

    out.bitbit_dims = {g.width, g.height, c.n2};
    if (c.r1 > 0) {
        out.checkcheck_dims = {max_ax - min_ax + 1, max_ay - min_ay + 1, c.r2};
    }
    if (out.bitbit_dims.width != out.checkcheck_dims.width || out.bitbit_dims.height != out.checkcheck_dims.height) {
        out.notes.push_back("check/check footprint " + std::to_string(out.checkcheck_dims.width) + "x" +
                            std::to_string(out.checkcheck_dims.height) + " differs from bit/bit footprint " +
                            g.label() + "; needs a translation or longer-range couplers");
    }
    if (frame.wrap_x || frame.wrap_y) {
        out.notes.push_back(std::string("distances use the minimum image along ") +
                            (frame.wrap_y ? "both grid axes" : "the width"));
    }
    if (!interleave) {
        out.notes.push_back("blocks placed side by side; checks are bi-local");
    }
    return out;
}

}  // namespace locohgp::metrics
