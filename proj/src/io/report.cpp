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

#include "locohgp/io/report.hpp"

#include "locohgp/errors.hpp"

namespace locohgp::io {

using nlohmann::ordered_json;

namespace {

ordered_json ratio_json(const metrics::Ratio& r) {
    return ordered_json{{"num", r.num}, {"den", r.den}, {"value", r.fixed3()}};
}

ordered_json distance_json(const gf2::DistanceResult& d) {
    if (d.is_infinite()) {
        return "inf";
    }
    if (d.value == 0) {
        return nullptr;
    }
    return d.value;
}

std::optional<explorer::DiscrepancyReport> match_discrepancy(const explorer::SearchRecord& r) {
    for (const auto& e : reference_entries()) {
        if (e.patch != r.patch || e.n != r.classical.n || e.k != r.classical.k) {
            continue;
        }
        bool same_grid = (e.width == r.grid.width && e.height == r.grid.height) ||
                         (e.width == r.grid.height && e.height == r.grid.width);
        if (!same_grid) {
            continue;
        }
        try {
            return explorer::discrepancy_report(r.classical, e.quantum_n, e.d);
        } catch (const ValidationError&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string row_text(const explorer::SearchRecord& r, metrics::Metric metric) {
    return "\"" + r.patch + "\"_{" + r.grid.label() + "}" + r.classical.triple() + " -> " + r.quantum.triple() + " " +
           metrics::select(r.merit, metric).fixed3();
}

ordered_json discrepancy_json(const explorer::DiscrepancyReport& d) {
    return ordered_json{{"published_n", d.published_n}, {"published_rep", d.published_rep},
                        {"implied_rows", d.implied_rows}, {"rank", d.rank},
                        {"k1", d.k1},                   {"computed_n", d.computed_n},
                        {"class", std::string(explorer::to_string(d.kind))}};
}

ordered_json record_json(const explorer::SearchRecord& r, metrics::Metric metric) {
    ordered_json j;
    j["row"] = row_text(r, metric);
    j["patch"] = r.patch;
    j["grid"] = {{"width", r.grid.width},
                 {"height", r.grid.height},
                 {"boundary", std::string(lattice::to_string(r.grid.boundary))},
                 {"orientation", std::string(lattice::to_string(r.grid.orientation))}};
    j["classical"] = {{"n", r.classical.n},
                      {"k", r.classical.k},
                      {"rows", r.classical.r},
                      {"rank", r.classical.rank},
                      {"d", distance_json(r.classical.d)},
                      {"d_exact", r.classical.d.exact},
                      {"triple", r.classical.triple()}};
    j["rep_length"] = r.rep_length;
    j["quantum"] = {{"n", r.quantum.n},
                    {"k", r.quantum.k},
                    {"dx", distance_json(r.quantum.dx)},
                    {"dz", distance_json(r.quantum.dz)},
                    {"d", distance_json(r.quantum.d)},
                    {"rank_checked", r.quantum.rank_checked},
                    {"triple", r.quantum.triple()}};
    j["weights"] = {{"w", r.weights.w}, {"qx", r.weights.qx}, {"qz", r.weights.qz}, {"q", r.weights.q}};
    j["merit"] = {{"kd2n", ratio_json(r.merit.kd2n)}, {"kn", ratio_json(r.merit.kn)}, {"dn", ratio_json(r.merit.dn)}};
    j["exact"] = r.exact();
    return j;
}

ordered_json config_json(const explorer::SearchConfig& cfg) {
    ordered_json j;
    j["min_grid"] = cfg.min_grid;
    j["max_grid"] = cfg.max_grid;
    j["weight_range"] = {cfg.min_weight, cfg.max_weight};
    j["min_k"] = cfg.min_k;
    j["min_d"] = cfg.min_d;
    j["metric"] = std::string(metrics::to_string(cfg.metric));
    j["k_budget"] = cfg.k_budget;
    j["isd_iterations"] = cfg.isd_iterations;
    j["seed"] = cfg.seed;
    j["boundary"] = std::string(lattice::to_string(cfg.boundary));
    j["orientation"] = std::string(lattice::to_string(cfg.orientation));
    j["row_policy"] = std::string(hgp::to_string(cfg.row_policy));
    j["rep"] = cfg.fixed_rep ? ordered_json(*cfg.fixed_rep) : ordered_json("auto");
    j["compute_distances"] = cfg.compute_distances;
    j["patches"] = cfg.patches;
    return j;
}

ordered_json emit_report(const std::vector<explorer::SearchRecord>& records, const ReportOptions& options) {
    ordered_json doc;
    doc["tool"] = "locohgp";
    doc["version"] = kToolVersion;
    doc["metric"] = std::string(metrics::to_string(options.metric));
    doc["conventions"] = {{"cell_index", "y*width+x"},
                          {"quantum_n", "n1*L + rows(H1)*(L-1)"},
                          {"merit_rounding", "half-even, 3 decimals"}};
    if (options.config) {
        doc["config"] = *options.config;
    }
    size_t count = options.limit == 0 ? records.size() : std::min(options.limit, records.size());
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < count; i++) {
        ordered_json j = record_json(records[i], options.metric);
        if (options.discrepancies) {
            if (auto d = match_discrepancy(records[i])) {
                j["discrepancy"] = discrepancy_json(*d);
            }
        }
        rows.push_back(std::move(j));
    }
    doc["rows"] = count;
    doc["records"] = std::move(rows);
    return doc;
}

ordered_json reference_report(lattice::Boundary boundary, hgp::RowPolicy policy,
                              const lattice::DistanceBudget& budget) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : reference_entries()) {
        ResolvedEntry res = resolve_entry(e, boundary, budget);
        ordered_json j;
        j["published"] = "\"" + e.patch + "\"_{" + std::to_string(e.width) + "x" + std::to_string(e.height) + "}[" +
                         std::to_string(e.n) + "," + std::to_string(e.k) + "," + std::to_string(e.d) + "] -> [[" +
                         std::to_string(e.quantum_n) + "," + std::to_string(e.quantum_k) + "," +
                         std::to_string(e.quantum_d) + "]]";
        j["group"] = e.group == ReferenceGroup::BestKd2n ? "kd2n" : "ratios";
        j["matched"] = res.matched;
        j["resolved_grid"] = res.grid.label();
        j["swapped"] = res.swapped;
        j["orientation"] = std::string(lattice::to_string(res.grid.orientation));
        j["classical"] = {{"n", res.n}, {"k", res.k}, {"d", res.d}, {"d_exact", res.d_exact}};
        if (res.matched) {
            explorer::SearchConfig cfg;
            cfg.boundary = boundary;
            cfg.orientation = res.grid.orientation;
            cfg.row_policy = policy;
            cfg.fixed_rep = e.d;
            cfg.k_budget = budget.k_budget;
            cfg.isd_iterations = budget.isd_iterations;
            cfg.seed = budget.seed;
            auto rec = explorer::evaluate(lattice::GeneratorPatch::parse(e.patch), res.grid, cfg);
            j["record"] = record_json(rec, e.group == ReferenceGroup::BestKd2n ? metrics::Metric::KD2N
                                                                               : metrics::Metric::KN);
            j["discrepancy"] = discrepancy_json(explorer::discrepancy_report(rec.classical, e.quantum_n, e.d));
            auto published = metrics::figures_of_merit(e.quantum_n, e.quantum_k, e.quantum_d);
            j["published_merit"] = {{"kd2n", published.kd2n.fixed3()},
                                    {"kn", published.kn.fixed3()},
                                    {"dn", published.dn.fixed3()}};
        }
        entries.push_back(std::move(j));
    }
    ordered_json doc;
    doc["tool"] = "locohgp";
    doc["version"] = kToolVersion;
    doc["boundary"] = std::string(lattice::to_string(boundary));
    doc["row_policy"] = std::string(hgp::to_string(policy));
    doc["entries"] = std::move(entries);
    return doc;
}

}  // namespace locohgp::io
