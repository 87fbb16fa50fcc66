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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "locohgp/errors.hpp"
#include "locohgp/gf2/linalg.hpp"
#include "locohgp/lattice/patch.hpp"
#include "locohgp/lattice/summary.hpp"
#include "locohgp/lattice/translational.hpp"
#include "oracles.hpp"

using namespace locohgp;
using lattice::Boundary;
using lattice::GeneratorPatch;
using lattice::GridSpec;
using lattice::Orientation;

namespace {

lattice::ClassicalCodeSummary summarize(const std::string& patch, const std::string& grid,
                                        Boundary b = Boundary::Cylinder, Orientation o = Orientation::Natural) {
    return lattice::classical_summary(
        lattice::build_translational(GeneratorPatch::parse(patch), lattice::parse_grid(grid, b, o)));
}

std::multiset<std::string> row_set(const gf2::BitMatrix& m) {
    std::multiset<std::string> out;
    for (size_t r = 0; r < m.rows(); r++) {
        out.insert(m.row_vector(r).to_string());
    }
    return out;
}

bool same_parameters(const lattice::ClassicalCodeSummary& a, const lattice::ClassicalCodeSummary& b) {
    return a.n == b.n && a.k == b.k && a.r == b.r && a.rank == b.rank && a.d.value == b.d.value &&
           a.k_t == b.k_t && a.d_t.value == b.d_t.value;
}

}  // namespace

TEST_CASE("patch parsing") {
    auto ab = GeneratorPatch::parse("ab").offsets();
    CHECK(ab == std::vector<lattice::Offset>{{0, 0}, {0, 1}});
    auto be = GeneratorPatch::parse("be").offsets();
    CHECK(be == std::vector<lattice::Offset>{{0, 1}, {1, 1}});
    CHECK(GeneratorPatch::parse("abcdefghi").weight() == 9);
    CHECK_THROWS_AS(GeneratorPatch::parse("ba"), MalformedPatch);
    CHECK_THROWS_AS(GeneratorPatch::parse(""), MalformedPatch);
    CHECK_THROWS_AS(GeneratorPatch::parse("aab"), MalformedPatch);
    CHECK_THROWS_AS(GeneratorPatch::parse("aj"), MalformedPatch);
    for (uint16_t m = 1; m < 512; m++) {
        auto p = GeneratorPatch::from_mask(m);
        CHECK(GeneratorPatch::parse(p.letters()) == p);
    }
}

TEST_CASE("canonical form") {
    CHECK(lattice::canonicalize(GeneratorPatch::parse("ei")).letters() == "ae");
    CHECK(lattice::canonicalize(GeneratorPatch::parse("ab")).letters() == "ab");
    CHECK(lattice::canonicalize(GeneratorPatch::parse("cf")).letters() == "ad");
    CHECK(lattice::diagonal_reflection(GeneratorPatch::parse("ab")).letters() == "ad");
    auto t = lattice::transpose_patch(GeneratorPatch::parse("ab"));
    CHECK(t.letters() == "ab");
    for (uint16_t m = 1; m < 512; m++) {
        auto c = lattice::canonicalize(GeneratorPatch::from_mask(m));
        CHECK(lattice::canonicalize(c) == c);
    }
}

TEST_CASE("canonicalization preserves code parameters under shifts") {
    std::mt19937_64 rng(21);
    const Boundary boundaries[] = {Boundary::Periodic, Boundary::Cylinder, Boundary::Open};
    int pairs = 0;
    while (pairs < 50) {
        auto p = GeneratorPatch::from_mask(static_cast<uint16_t>(1 + rng() % 511));
        auto c = lattice::canonicalize(p);
        int shift_r = static_cast<int>(rng() % (4 - c.row_extent()));
        int shift_c = static_cast<int>(rng() % (4 - c.col_extent()));
        std::vector<lattice::Offset> moved;
        for (auto o : c.offsets()) {
            moved.push_back({o.row + shift_r, o.col + shift_c});
        }
        auto shifted = GeneratorPatch::from_offsets(moved);
        for (int g = 0; g < 3; g++) {
            GridSpec grid{3 + rng() % 5, 3 + rng() % 5, boundaries[rng() % 3], Orientation::Natural};
            lattice::DistanceBudget budget;
            auto a = lattice::classical_summary(lattice::build_translational(shifted, grid), budget);
            auto b = lattice::classical_summary(lattice::build_translational(c, grid), budget);
            CHECK(same_parameters(a, b));
        }
        pairs++;
    }
}

TEST_CASE("grid parsing") {
    auto g = lattice::parse_grid("17x5");
    CHECK(g.width == 17);
    CHECK(g.height == 5);
    CHECK(g.label() == "17x5");
    CHECK_THROWS_AS(lattice::parse_grid("17"), ValidationError);
    CHECK_THROWS_AS(lattice::parse_grid("0x3"), ValidationError);
    CHECK(lattice::parse_boundary("torus") == Boundary::Periodic);
    CHECK_THROWS_AS(lattice::parse_boundary("mobius"), ValidationError);
}

TEST_CASE("grids smaller than the patch are rejected") {
    CHECK_THROWS_AS(lattice::build_translational(GeneratorPatch::parse("ai"), lattice::parse_grid("2x3")), GridTooSmall);
    CHECK_THROWS_AS(lattice::build_translational(GeneratorPatch::parse("ag"), lattice::parse_grid("3x2")), GridTooSmall);
    CHECK_NOTHROW(lattice::build_translational(GeneratorPatch::parse("ab"), lattice::parse_grid("2x1")));
}

TEST_CASE("translational matrices: row weight and row counts") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 200; t++) {
        auto p = lattice::canonicalize(GeneratorPatch::from_mask(static_cast<uint16_t>(1 + rng() % 511)));
        size_t w = 3 + rng() % 6, h = 3 + rng() % 6;
        size_t bx = static_cast<size_t>(p.col_extent()), by = static_cast<size_t>(p.row_extent());
        for (Boundary b : {Boundary::Periodic, Boundary::Cylinder, Boundary::Open}) {
            GridSpec g{w, h, b, Orientation::Natural};
            auto m = lattice::build_translational(p, g);
            CHECK(m.cols() == w * h);
            for (size_t r = 0; r < m.rows(); r++) {
                CHECK(m.row_weight(r) == p.weight());
            }
            size_t expected_rows = b == Boundary::Periodic   ? w * h
                                   : b == Boundary::Cylinder ? w * (h - by + 1)
                                                             : (w - bx + 1) * (h - by + 1);
            CHECK(m.rows() == expected_rows);
            CHECK(lattice::check_anchors(p, g).size() == m.rows());
        }
    }
}

TEST_CASE("periodic examples") {
    auto ab = summarize("ab", "3x3", Boundary::Periodic);
    CHECK(ab.r == 9);
    CHECK(ab.triple() == "[9,3,3]");
    CHECK(summarize("ad", "3x3", Boundary::Periodic).triple() == "[9,3,3]");
    // Full translate set: r = wh and k_t = k.
    for (const char* p : {"ab", "ad", "abd", "bdg", "abde"}) {
        for (const char* g : {"3x3", "4x5", "6x4"}) {
            auto s = summarize(p, g, Boundary::Periodic);
            CHECK(s.r == s.n);
            CHECK(s.k_t == s.k);
        }
    }
}

TEST_CASE("published classical triples") {
    CHECK(summarize("ad", "3x3").triple() == "[9,3,3]");
    CHECK(summarize("bdg", "3x4").triple() == "[12,6,3]");
    CHECK(summarize("cde", "3x4").triple() == "[12,3,3]");
    CHECK(summarize("achi", "5x4").triple() == "[20,12,3]");
    CHECK(summarize("abde", "3x3").triple() == "[9,5,3]");
    CHECK(summarize("bdfgh", "5x3").triple() == "[15,10,3]");
    CHECK(summarize("cdg", "5x16").triple() == "[80,10,27]");
    CHECK(summarize("be", "5x17").triple() == "[85,5,17]");
    CHECK(summarize("be", "17x5", Boundary::Cylinder, Orientation::Transposed).triple() == "[85,5,17]");
}

TEST_CASE("orientation duality") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; t++) {
        auto p = lattice::canonicalize(GeneratorPatch::from_mask(static_cast<uint16_t>(1 + rng() % 511)));
        size_t w = 3 + rng() % 4, h = 3 + rng() % 4;
        for (Boundary b : {Boundary::Periodic, Boundary::Cylinder, Boundary::Open}) {
            auto a = lattice::classical_summary(lattice::build_translational(p, {w, h, b, Orientation::Natural}));
            auto c = lattice::classical_summary(lattice::build_translational(p, {h, w, b, Orientation::Transposed}));
            if (b == Boundary::Cylinder) {
                // Only the width wraps, so swapping the grid changes the code. Transposing
                // the reflected patch on the same grid recovers it.
                auto r = lattice::classical_summary(
                    lattice::build_translational(lattice::diagonal_reflection(p), {w, h, b, Orientation::Transposed}));
                CHECK(same_parameters(a, r));
            } else {
                CHECK(same_parameters(a, c));
            }
        }
    }
}

TEST_CASE("transpose-circulant property on the torus") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 40; t++) {
        auto p = lattice::canonicalize(GeneratorPatch::from_mask(static_cast<uint16_t>(1 + rng() % 511)));
        GridSpec g{3 + rng() % 4, 3 + rng() % 4, Boundary::Periodic, Orientation::Natural};
        auto h = lattice::build_translational(p, g);
        auto ht = lattice::build_translational(lattice::transpose_patch(p), g);
        // On the torus anchors and cells share one indexing, so the rows of H^T are
        // exactly the translates of the negated patch.
        CHECK(row_set(h.transpose()) == row_set(ht));
        auto s = lattice::classical_summary(h);
        auto st = lattice::classical_summary(ht);
        CHECK(s.k_t == st.k);
        CHECK(s.d_t.value == st.d.value);
    }
}

TEST_CASE("transpose patch gives the transposed code") {
    auto bdg = GeneratorPatch::parse("bdg");
    auto t = lattice::transpose_patch(bdg);
    GridSpec g{3, 4, Boundary::Periodic, Orientation::Natural};
    auto h = lattice::build_translational(bdg, g);
    auto ht = lattice::build_translational(t, g);
    CHECK(gf2::rank(h) == gf2::rank(ht));
    auto cdg = GeneratorPatch::parse("cdg");
    GridSpec g2{5, 16, Boundary::Periodic, Orientation::Natural};
    auto s = lattice::classical_summary(lattice::build_translational(cdg, g2));
    auto st = lattice::classical_summary(lattice::build_translational(lattice::transpose_patch(cdg), g2));
    CHECK(s.k_t == st.k);
    CHECK(s.d_t.value == st.d.value);
}

TEST_CASE("repetition codes") {
    CHECK(lattice::repetition_check_matrix(3) == gf2::BitMatrix::from_strings({"110", "011"}));
    CHECK(lattice::repetition_check_matrix(2) == gf2::BitMatrix::from_strings({"11"}));
    CHECK_THROWS_AS(lattice::repetition_check_matrix(1), LengthTooSmall);
    for (size_t L = 2; L <= 40; L++) {
        auto s = lattice::classical_summary(lattice::repetition_check_matrix(L));
        CHECK(s.n == L);
        CHECK(s.k == 1);
        CHECK(s.d.value == L);
        CHECK(s.k_t == 0);
        CHECK(s.d_t.is_infinite());
    }
    CHECK(lattice::classical_summary(lattice::repetition_check_matrix(27)).triple() == "[27,1,27]");
}

TEST_CASE("fibonacci automaton code") {
    CHECK_THROWS_AS(lattice::fibonacci_code(3), SizeTooSmall);
    for (size_t l : {4, 8, 16}) {
        auto h = lattice::fibonacci_code(l);
        CHECK(h.cols() == l * l);
        CHECK(h.rows() == l * (l - 1));
        for (size_t r = 0; r < h.rows(); r++) {
            CHECK(h.row_weight(r) == 4);
        }
        auto c = lattice::build_translational(GeneratorPatch::parse("abce"),
                                              GridSpec{l, l, Boundary::Cylinder, Orientation::Natural});
        CHECK(row_set(c) == row_set(h));
    }
    auto h4 = lattice::fibonacci_code(4);
    CHECK(lattice::classical_summary(h4).k == 16 - oracle::rank(oracle::masks(h4)));
}
