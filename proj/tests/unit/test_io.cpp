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

#include <random>
#include <sstream>

#include "locohgp/errors.hpp"
#include "locohgp/io/alist.hpp"
#include "locohgp/io/cli.hpp"
#include "locohgp/io/families.hpp"
#include "locohgp/io/report.hpp"
#include "locohgp/lattice/translational.hpp"
#include "oracles.hpp"

using namespace locohgp;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "locohgp");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = io::cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("alist layout") {
    std::string rep = io::export_alist(lattice::repetition_check_matrix(3));
    CHECK(rep == "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
    CHECK(io::export_alist(gf2::BitMatrix::identity(1)) == "1 1\n1 1\n1\n1\n1\n1\n");
}

TEST_CASE("alist round trip") {
    auto ab = lattice::build_translational(lattice::GeneratorPatch::parse("ab"),
                                           lattice::GridSpec{2, 2, lattice::Boundary::Periodic});
    CHECK(io::import_alist(io::export_alist(ab)) == ab);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; t++) {
        auto m = oracle::random_matrix(1 + rng() % 64, 1 + rng() % 64, 0.05 + 0.3 * (t % 3), rng);
        CHECK(io::import_alist(io::export_alist(m)) == m);
    }
}

TEST_CASE("malformed alist input") {
    CHECK_THROWS_AS(io::import_alist("3"), MalformedAlist);
    CHECK_THROWS_AS(io::import_alist("2 1\n1 1\n1 1\n1\n1\n1\n1\n"), MalformedAlist);
    CHECK_THROWS_AS(io::import_alist("1 1\n1 1\n1\n1\n2\n1\n"), MalformedAlist);
}

TEST_CASE("family parameters") {
    auto p1 = io::family_params(io::family_row(1), 0, 3);
    CHECK(p1.n == 80);
    CHECK(p1.k == 10);
    CHECK(p1.dx == 3);
    CHECK(p1.dz == 5);
    auto p2 = io::family_params(io::family_row(2), 1, 2);
    CHECK(p2.n == 156);
    CHECK(p2.k == 24);
    CHECK(p2.dz == 9);
    auto p5 = io::family_params(io::family_row(5), 0, 2);
    CHECK(p5.n == 374);
    CHECK(p5.k == 34);
    CHECK(p5.dz == 22);
    CHECK_THROWS_AS(io::family_row(6), ValidationError);
    CHECK_THROWS_AS(io::family_params(io::family_row(1), 0, 1), LengthTooSmall);
}

TEST_CASE("family rows are self-consistent seeds") {
    for (const auto& row : io::family_rows()) {
        for (size_t l = 0; l <= 4; l++) {
            CHECK(row.r1.at(l) == row.n1.at(l) - row.k1.at(l));
            for (size_t L = 2; L <= 6; L++) {
                auto p = io::family_params(row, l, L);
                CHECK(p.n == L * row.n1.at(l) + (L - 1) * row.r1.at(l));
                CHECK(p.dx == L);
            }
        }
    }
    CHECK(io::family_row(4).published_k.to_string() == "32+2l");
    CHECK(io::family_row(4).k1.to_string() == "34+2l");
    CHECK(io::fibonacci_family().check_weight == 6);
}

TEST_CASE("report rows and schema") {
    explorer::SearchConfig cfg;
    auto rec = explorer::evaluate(lattice::GeneratorPatch::parse("bdg"), lattice::parse_grid("3x4"), cfg);
    CHECK(io::row_text(rec, metrics::Metric::KN) == "\"bdg\"_{3x4}[12,6,3] -> [[48,6,3]] 0.125");

    io::ReportOptions opts;
    opts.metric = metrics::Metric::KN;
    opts.config = io::config_json(cfg);
    auto doc = io::emit_report({rec}, opts);
    for (const char* key : {"tool", "version", "metric", "conventions", "config", "rows", "records"}) {
        CHECK(doc.contains(key));
    }
    REQUIRE(doc["records"].size() == 1);
    const auto& r = doc["records"][0];
    CHECK(r["discrepancy"]["class"] == "Consistent");
    auto kn = r["merit"]["kn"];
    CHECK(metrics::Ratio{kn["num"].get<uint64_t>(), kn["den"].get<uint64_t>()}.fixed3() == kn["value"]);
    CHECK(r["quantum"]["n"] == 48);

    auto reparsed = nlohmann::ordered_json::parse(doc.dump());
    CHECK(reparsed == doc);

    auto empty = io::emit_report({}, {});
    CHECK(empty["rows"] == 0);
    CHECK(empty["records"].empty());
}

TEST_CASE("report flags the cdg length gap") {
    explorer::SearchConfig cfg;
    auto rec = explorer::evaluate(lattice::GeneratorPatch::parse("cdg"), lattice::parse_grid("5x16"), cfg);
    auto doc = io::emit_report({rec}, {});
    const auto& d = doc["records"][0]["discrepancy"];
    CHECK(d["class"] == "KMatching");
    CHECK(d["computed_n"] == 3980);
    CHECK(d["implied_rows"] == 10);
}

TEST_CASE("reference entries resolve") {
    auto be = io::find_reference("be");
    REQUIRE(be);
    auto res = io::resolve_entry(*be, lattice::Boundary::Cylinder);
    CHECK(res.matched);
    CHECK(res.swapped);
    CHECK(res.grid.label() == "5x17");
    auto bdg = io::resolve_entry(*io::find_reference("bdg"), lattice::Boundary::Cylinder);
    CHECK(bdg.matched);
    CHECK_FALSE(bdg.swapped);
    CHECK(io::reference_entries().size() == 13);
}

TEST_CASE("cli build and hgp") {
    auto b = run({"build", "--patch", "cdg", "--grid", "5x16"});
    CHECK(b.code == 0);
    CHECK(b.out.find("[80,10,27]") != std::string::npos);

    auto h = run({"hgp", "--patch", "bdg", "--grid", "3x4", "--rep", "3"});
    CHECK(h.code == 0);
    CHECK(h.out.find("[[48,6,3]]") != std::string::npos);
    CHECK(h.out.find("w=5") != std::string::npos);
    CHECK(h.out.find("q=5") != std::string::npos);
}

TEST_CASE("cli families") {
    auto f = run({"families", "--row", "1", "--l", "0", "--rep", "3"});
    CHECK(f.code == 0);
    CHECK(f.out.find("n=80 k=10 dx=3 dz=5") != std::string::npos);
    auto all = run({"families"});
    CHECK(all.out.find("fibonacci") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code != 0);
    CHECK(run({"build", "--patch", "ba", "--grid", "3x3"}).code == 1);
    CHECK(run({"build", "--patch", "ab"}).code == 1);
    CHECK(run({"hgp", "--patch", "ab", "--grid", "3x3", "--rep", "1"}).code == 1);
    CHECK(run({"families", "--row", "9"}).code == 1);
    CHECK(run({"export", "--patch", "ab", "--grid", "3x3", "--format", "png"}).code == 1);
    auto bad = run({"build", "--patch", "ai", "--grid", "2x2"});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli exports") {
    auto a = run({"export", "--patch", "ab", "--grid", "3x3", "--format", "alist"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("9 6\n", 0) == 0);
    auto g = run({"export", "--patch", "ab", "--grid", "3x1", "--boundary", "open", "--rep", "3", "--format", "graph"});
    CHECK(g.code == 0);
    CHECK(g.out.find("counts 13 6 6") != std::string::npos);
    auto j = run({"export", "--patch", "bdg", "--grid", "3x4", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["quantum"]["n"] == 48);
}

TEST_CASE("cli search output is stable across worker counts") {
    std::vector<std::string> base{"search", "--max-grid", "5", "--min-weight", "2", "--max-weight", "3"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto four = base;
    four.insert(four.end(), {"--jobs", "4"});
    auto a = run(one);
    auto b = run(four);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli geometry") {
    auto g = run({"geometry", "--patch", "ab", "--grid", "3x1", "--boundary", "open", "--rep", "3"});
    CHECK(g.code == 0);
    CHECK(g.out.find("locality radius 1") != std::string::npos);
}
