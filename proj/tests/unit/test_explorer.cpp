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

#include <set>

#include "locohgp/errors.hpp"
#include "locohgp/explorer/discrepancy.hpp"
#include "locohgp/explorer/search.hpp"
#include "locohgp/hgp/oracle.hpp"

using namespace locohgp;
using explorer::SearchConfig;
using lattice::Boundary;
using lattice::GeneratorPatch;
using lattice::GridSpec;
using lattice::Orientation;

namespace {

/// Canonical translation classes of subsets of the 3x3 block, computed
/// directly on coordinate sets.
size_t canonical_count(size_t weight) {
    std::set<std::set<std::pair<int, int>>> classes;
    for (int m = 1; m < 512; m++) {
        if (static_cast<size_t>(__builtin_popcount(m)) != weight) {
            continue;
        }
        int min_r = 3, min_c = 3;
        for (int i = 0; i < 9; i++) {
            if ((m >> i) & 1) {
                min_r = std::min(min_r, i / 3);
                min_c = std::min(min_c, i % 3);
            }
        }
        std::set<std::pair<int, int>> cells;
        for (int i = 0; i < 9; i++) {
            if ((m >> i) & 1) {
                cells.insert({i / 3 - min_r, i % 3 - min_c});
            }
        }
        classes.insert(cells);
    }
    return classes.size();
}

SearchConfig small_config() {
    SearchConfig cfg;
    cfg.max_grid = 5;
    cfg.min_weight = 2;
    cfg.max_weight = 3;
    return cfg;
}

explorer::SearchRecord eval(const char* patch, const char* grid, SearchConfig cfg = {}) {
    return explorer::evaluate(GeneratorPatch::parse(patch), lattice::parse_grid(grid, cfg.boundary, cfg.orientation),
                              cfg);
}

}  // namespace

TEST_CASE("patch enumeration") {
    SearchConfig cfg;
    size_t raw = 0;
    for (uint16_t m = 1; m < 512; m++) {
        raw += GeneratorPatch::from_mask(m).weight() >= 1;
    }
    CHECK(raw == 511);

    cfg.min_weight = cfg.max_weight = 1;
    auto ones = explorer::enumerate_patches(cfg);
    REQUIRE(ones.size() == 1);
    CHECK(ones[0].letters() == "a");

    size_t total = 0;
    for (size_t w = 1; w <= 9; w++) {
        cfg.min_weight = cfg.max_weight = w;
        auto ps = explorer::enumerate_patches(cfg);
        CHECK(ps.size() == canonical_count(w));
        total += ps.size();
        for (size_t i = 1; i < ps.size(); i++) {
            CHECK(ps[i - 1].letters() < ps[i].letters());
        }
    }
    cfg.min_weight = 1;
    cfg.max_weight = 9;
    CHECK(explorer::enumerate_patches(cfg).size() == total);
}

TEST_CASE("patch set is closed under diagonal reflection") {
    SearchConfig cfg;
    std::set<std::string> all;
    for (const auto& p : explorer::enumerate_patches(cfg)) {
        all.insert(p.letters());
    }
    for (const auto& p : explorer::enumerate_patches(cfg)) {
        CHECK(all.count(lattice::canonicalize(lattice::diagonal_reflection(p)).letters()) == 1);
    }
}

TEST_CASE("sweep grids") {
    SearchConfig cfg;
    cfg.max_grid = 5;
    CHECK(explorer::sweep_grids(cfg).size() == 9);
    cfg.boundary = Boundary::Periodic;
    CHECK(explorer::sweep_grids(cfg).size() == 6);
}

TEST_CASE("evaluate examples") {
    auto cdg = eval("cdg", "5x16");
    CHECK(cdg.classical.triple() == "[80,10,27]");
    CHECK(cdg.rep_length == 27);
    CHECK(cdg.quantum.k == 10);
    CHECK(cdg.quantum.d.value == 27);
    CHECK(cdg.exact());

    auto ad = eval("ad", "3x3");
    CHECK(ad.classical.triple() == "[9,3,3]");
    CHECK(ad.quantum.k == 3);
    CHECK(ad.quantum.d.value == 3);

    auto a = eval("a", "4x4");
    CHECK(a.quantum.k == 0);
    CHECK(a.quantum.d.is_infinite());
    CHECK(a.merit.kd2n.num == 0);

    CHECK_THROWS_AS(eval("ai", "2x2"), GridTooSmall);
}

TEST_CASE("records carry consistent merits and weight laws") {
    SearchConfig cfg = small_config();
    cfg.boundary = Boundary::Periodic;
    cfg.row_policy = hgp::RowPolicy::AllTranslates;
    auto result = explorer::search(cfg, 2);
    CHECK(result.records.size() == result.evaluated);
    for (const auto& r : result.records) {
        auto m = metrics::figures_of_merit(r.quantum.n, r.quantum.k, r.merit_distance());
        CHECK(m.kd2n == r.merit.kd2n);
        CHECK(m.kn == r.merit.kn);
        CHECK(m.dn == r.merit.dn);
        size_t wt = GeneratorPatch::parse(r.patch).weight();
        CHECK(r.weights.w == wt + 2);
        CHECK(r.weights.q == wt + 2);
        CHECK(r.weights.qx == std::max<size_t>(wt, 2));
    }
}

TEST_CASE("formula distances match the oracle on searched records") {
    SearchConfig cfg;
    cfg.max_grid = 4;
    cfg.min_weight = 2;
    cfg.max_weight = 4;
    auto result = explorer::search(cfg, 1);
    size_t verified = 0;
    for (const auto& r : result.records) {
        if (!r.exact()) {
            continue;
        }
        auto code = hgp::patch_product(GeneratorPatch::parse(r.patch), r.grid, r.rep_length, cfg.row_policy);
        CHECK_FALSE(hgp::css_violation(code));
        auto [kx, kz] = hgp::kernel_dimensions(code);
        if (kx > 16 || kz > 16) {
            continue;
        }
        auto o = hgp::distance_oracle_small(code, 16);
        CHECK(o.dx.value == r.quantum.dx.value);
        CHECK(o.dz.value == r.quantum.dz.value);
        verified++;
    }
    CHECK(verified > 10);
}

TEST_CASE("search ranks deterministically and independently of worker count") {
    SearchConfig cfg = small_config();
    auto a = explorer::search(cfg, 1);
    auto b = explorer::search(cfg, 3);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); i++) {
        CHECK(a.records[i].patch == b.records[i].patch);
        CHECK(a.records[i].grid.label() == b.records[i].grid.label());
        CHECK(a.records[i].quantum.triple() == b.records[i].quantum.triple());
    }
    for (size_t i = 1; i < a.records.size(); i++) {
        CHECK_FALSE(explorer::ranks_before(a.records[i], a.records[i - 1], cfg.metric));
    }
}

TEST_CASE("filters") {
    SearchConfig cfg;
    cfg.min_grid = 1;
    cfg.max_grid = 4;
    cfg.min_weight = cfg.max_weight = 2;
    cfg.patches = {"ab"};
    auto all = explorer::search(cfg, 1);
    bool saw_k1 = false;
    for (const auto& r : all.records) {
        saw_k1 = saw_k1 || r.quantum.k == 1;
    }
    CHECK(saw_k1);
    cfg.min_k = 2;
    auto filtered = explorer::search(cfg, 1);
    for (const auto& r : filtered.records) {
        CHECK(r.quantum.k >= 2);
    }
    CHECK(filtered.filtered > 0);
}

TEST_CASE("best k/n among weight-3 patches") {
    SearchConfig cfg;
    cfg.max_grid = 8;
    cfg.min_weight = cfg.max_weight = 3;
    cfg.min_k = 2;
    cfg.min_d = 3;
    cfg.metric = metrics::Metric::KN;
    auto result = explorer::search(cfg, 1);
    REQUIRE_FALSE(result.records.empty());
    const auto& top = result.records.front();
    CHECK(top.merit.kn.fixed3() == "0.125");
    bool has_bdg = false;
    for (const auto& r : result.records) {
        if (!(r.merit.kn == top.merit.kn)) {
            break;
        }
        has_bdg = has_bdg || (r.patch == "bdg" && r.grid.label() == "3x4" && r.quantum.triple() == "[[48,6,3]]");
    }
    CHECK(has_bdg);
}

TEST_CASE("weight-2 sweep produces the [85,5,17] chain code") {
    SearchConfig cfg;
    cfg.max_grid = 17;
    cfg.min_weight = cfg.max_weight = 2;
    cfg.patches = {"be"};
    auto result = explorer::search(cfg, 1);
    bool found = false;
    for (const auto& r : result.records) {
        if (r.classical.triple() == "[85,5,17]") {
            found = true;
            CHECK(r.quantum.k == 5);
            CHECK(r.quantum.d.value == 17);
            CHECK(r.quantum.n == 2725);
        }
    }
    CHECK(found);
    CHECK(metrics::figures_of_merit(1525, 5, 17).kd2n.fixed3() == "0.948");
}

TEST_CASE("seeds are order independent") {
    auto p = GeneratorPatch::parse("bdg");
    GridSpec g{3, 4};
    CHECK(explorer::record_seed(1, p, g) == explorer::record_seed(1, p, g));
    CHECK(explorer::record_seed(1, p, g) != explorer::record_seed(2, p, g));
    CHECK(explorer::record_seed(1, p, g) != explorer::record_seed(1, p, GridSpec{4, 3}));
}

TEST_CASE("config validation") {
    SearchConfig cfg;
    cfg.max_grid = 2;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.max_weight = 10;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
    cfg = {};
    cfg.fixed_rep = 1;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("discrepancy classification") {
    auto bdg = eval("bdg", "3x4").classical;
    auto d = explorer::discrepancy_report(bdg, 48, 3);
    CHECK(d.implied_rows == 6);
    CHECK(d.kind == explorer::Discrepancy::Consistent);

    auto cdg = eval("cdg", "5x16").classical;
    auto dc = explorer::discrepancy_report(cdg, 2420, 27);
    CHECK(dc.implied_rows == 10);
    CHECK(dc.rank == 70);
    CHECK(dc.kind == explorer::Discrepancy::KMatching);
    CHECK(dc.computed_n == 3980);

    auto ad = eval("ad", "3x3").classical;
    auto da = explorer::discrepancy_report(ad, 33, 3);
    CHECK(da.implied_rows == 3);
    CHECK(da.rank == 6);
    CHECK(da.kind == explorer::Discrepancy::KMatching);

    CHECK(explorer::discrepancy_report(ad, 9 * 3 + 4 * 2, 3).kind == explorer::Discrepancy::Other);
    CHECK_THROWS_AS(explorer::discrepancy_report(ad, 34, 3), NonIntegerImpliedRows);
    CHECK_THROWS_AS(explorer::discrepancy_report(ad, 10, 3), NonIntegerImpliedRows);
}
