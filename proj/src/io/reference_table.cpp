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

#include "locohgp/io/reference_table.hpp"

#include "locohgp/errors.hpp"
#include "locohgp/lattice/patch.hpp"

namespace locohgp::io {

const std::vector<ReferenceEntry>& reference_entries() {
    using G = ReferenceGroup;
    static const std::vector<ReferenceEntry> entries{
        {G::BestKd2n, "be", 17, 5, 85, 5, 17, 1525, 5, 17, 4, 4, "0.948", "", ""},
        {G::BestKd2n, "cdg", 5, 16, 80, 10, 27, 2420, 10, 27, 5, 5, "3.012", "", ""},
        {G::BestKd2n, "bdfg", 17, 17, 289, 34, 68, 21930, 34, 68, 6, 6, "7.169", "", ""},
        {G::BestKd2n, "cdghi", 17, 17, 289, 34, 75, 24191, 34, 75, 7, 7, "7.906", "", ""},
        {G::BestKd2n, "adfghi", 17, 16, 272, 34, 76, 23222, 34, 76, 8, 8, "8.457", "", ""},
        {G::BestKd2n, "abcdghi", 17, 17, 289, 34, 83, 26775, 34, 83, 9, 9, "8.748", "", ""},
        {G::BestKd2n, "abcdfghi", 17, 16, 272, 34, 80, 24446, 34, 80, 10, 10, "8.901", "", ""},
        {G::BestRatios, "ad", 3, 3, 9, 3, 3, 33, 3, 3, 4, 4, "", "0.091", "0.091"},
        {G::BestRatios, "bdg", 3, 4, 12, 6, 3, 48, 6, 3, 5, 5, "", "0.125", "0.062"},
        {G::BestRatios, "cde", 3, 4, 12, 3, 3, 42, 3, 3, 5, 5, "", "0.071", "0.071"},
        {G::BestRatios, "achi", 5, 4, 20, 12, 3, 84, 12, 3, 6, 6, "", "0.143", "0.036"},
        {G::BestRatios, "abde", 3, 3, 9, 5, 3, 37, 5, 3, 6, 6, "", "0.135", "0.081"},
        {G::BestRatios, "bdfgh", 5, 3, 15, 10, 3, 65, 10, 3, 7, 7, "", "0.154", "0.046"},
    };
    return entries;
}

std::optional<ReferenceEntry> find_reference(const std::string& patch, size_t width, size_t height) {
    for (const auto& e : reference_entries()) {
        if (e.patch == patch && (width == 0 || (e.width == width && e.height == height))) {
            return e;
        }
    }
    return std::nullopt;
}

ResolvedEntry resolve_entry(const ReferenceEntry& e, lattice::Boundary boundary,
                            const lattice::DistanceBudget& budget) {
    auto patch = lattice::GeneratorPatch::parse(e.patch);
    struct Candidate {
        bool swapped;
        lattice::Orientation orientation;
    };
    const Candidate order[] = {{false, lattice::Orientation::Natural},
                               {true, lattice::Orientation::Natural},
                               {false, lattice::Orientation::Transposed},
                               {true, lattice::Orientation::Transposed}};
    ResolvedEntry last;
    for (const auto& cand : order) {
        lattice::GridSpec g{cand.swapped ? e.height : e.width, cand.swapped ? e.width : e.height, boundary,
                            cand.orientation};
        ResolvedEntry r;
        r.grid = g;
        r.swapped = cand.swapped;
        gf2::BitMatrix h;
        try {
            h = lattice::build_translational(patch, g);
        } catch (const GridTooSmall&) {
            continue;
        }
        lattice::DistanceBudget b = budget;
        b.compute = false;
        auto s = lattice::classical_summary(h, b);
        r.n = s.n;
        r.k = s.k;
        if (s.n == e.n && s.k == e.k) {
            auto d = lattice::code_distance(h, budget);
            r.d = d.value;
            r.d_exact = d.exact;
            r.matched = !d.is_infinite() && d.value == e.d;
        }
        if (r.matched) {
            return r;
        }
        last = r;
    }
    return last;
}

}  // namespace locohgp::io
