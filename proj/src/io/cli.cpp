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

#include "locohgp/io/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "locohgp/errors.hpp"
#include "locohgp/hgp/oracle.hpp"
#include "locohgp/io/alist.hpp"
#include "locohgp/io/families.hpp"
#include "locohgp/io/report.hpp"
#include "locohgp/metrics/layout.hpp"
#include "locohgp/metrics/tanner.hpp"

namespace locohgp::io {
namespace {

struct CodeOptions {
    std::string patch;
    std::string grid;
    std::string boundary = "cylinder";
    std::string orientation = "natural";
    std::string rep = "auto";
    std::string policy = "independent-rows";
    size_t k_budget = gf2::kDefaultKBudget;
    uint64_t isd_iterations = 200;
    uint64_t seed = 1;
};

void add_classical_options(CLI::App* cmd, CodeOptions& o) {
    cmd->add_option("--patch", o.patch, "Generator patch letters a..i, e.g. cdg")->required();
    cmd->add_option("--grid", o.grid, "Grid WxH (width first)")->required();
    cmd->add_option("--boundary", o.boundary, "periodic | cylinder | open")->capture_default_str();
    cmd->add_option("--orientation", o.orientation, "natural | transposed")->capture_default_str();
    cmd->add_option("--k-budget", o.k_budget, "Exhaustive distance search up to this dimension")
        ->capture_default_str();
    cmd->add_option("--isd-iterations", o.isd_iterations, "Information-set iterations above the budget")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Seed for information-set search")->capture_default_str();
}

void add_product_options(CLI::App* cmd, CodeOptions& o) {
    add_classical_options(cmd, o);
    cmd->add_option("--rep", o.rep, "Repetition length: auto or an integer >= 2")->capture_default_str();
    cmd->add_option("--policy", o.policy, "all-translates | independent-rows")->capture_default_str();
}

std::optional<size_t> parse_rep(const std::string& s) {
    if (s == "auto") {
        return std::nullopt;
    }
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
        throw ValidationError("--rep must be 'auto' or an integer");
    }
    if (v < 2) {
        throw LengthTooSmall("repetition length must be at least 2");
    }
    return v;
}

explorer::SearchConfig config_from(const CodeOptions& o) {
    explorer::SearchConfig cfg;
    cfg.boundary = lattice::parse_boundary(o.boundary);
    cfg.orientation = lattice::parse_orientation(o.orientation);
    cfg.row_policy = hgp::parse_row_policy(o.policy);
    cfg.fixed_rep = parse_rep(o.rep);
    cfg.k_budget = o.k_budget;
    cfg.isd_iterations = o.isd_iterations;
    cfg.seed = o.seed;
    return cfg;
}

lattice::GridSpec grid_from(const CodeOptions& o) {
    return lattice::parse_grid(o.grid, lattice::parse_boundary(o.boundary), lattice::parse_orientation(o.orientation));
}

lattice::DistanceBudget budget_from(const CodeOptions& o) {
    lattice::DistanceBudget b;
    b.k_budget = o.k_budget;
    b.isd_iterations = o.isd_iterations;
    b.seed = o.seed;
    return b;
}

struct Built {
    explorer::SearchRecord record;
    hgp::CssCode code;
};

Built build_product(const CodeOptions& o) {
    auto cfg = config_from(o);
    auto patch = lattice::GeneratorPatch::parse(o.patch);
    auto grid = grid_from(o);
    Built b;
    b.record = explorer::evaluate(patch, grid, cfg);
    b.code = hgp::patch_product(patch, grid, b.record.rep_length, cfg.row_policy);
    return b;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open '" + path + "' for writing");
    }
    f << text;
}

void print_classical(const std::string& patch, const lattice::GridSpec& g, const lattice::ClassicalCodeSummary& s,
                     std::ostream& out) {
    out << "\"" << patch << "\"_{" << g.label() << "}" << s.triple() << "\n";
    out << "boundary " << lattice::to_string(g.boundary) << ", orientation " << lattice::to_string(g.orientation)
        << "\n";
    out << "rows " << s.r << ", rank " << s.rank << ", transpose kernel " << s.k_t << "\n";
    out << "check weight " << s.check_weight << ", bit degree " << s.bit_degree << "\n";
    out << "distance " << s.d.to_string() << (s.d.exact ? " (exact)" : " (upper bound)") << "\n";
}

void print_product(const explorer::SearchRecord& r, std::ostream& out) {
    out << row_text(r, metrics::Metric::KD2N) << "\n";
    out << "rep " << r.rep_length << ", dx " << r.quantum.dx.to_string() << ", dz " << r.quantum.dz.to_string()
        << (r.quantum.rank_checked ? ", k rank-checked" : "") << "\n";
    out << "w=" << r.weights.w << " qx=" << r.weights.qx << " qz=" << r.weights.qz << " q=" << r.weights.q << "\n";
    out << "kd2n " << r.merit.kd2n.fixed3() << ", kn " << r.merit.kn.fixed3() << ", dn " << r.merit.dn.fixed3()
        << "\n";
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally generated hypergraph-product codes"};
    app.require_subcommand(1);

    CodeOptions build_opts;
    auto* build = app.add_subcommand("build", "Classical translational code from a patch");
    add_classical_options(build, build_opts);

    CodeOptions hgp_opts;
    bool hgp_oracle = false;
    auto* hgp_cmd = app.add_subcommand("hgp", "Hypergraph product with a repetition code");
    add_product_options(hgp_cmd, hgp_opts);
    hgp_cmd->add_flag("--oracle", hgp_oracle, "Also compute distances by exhaustive logical search (small codes)");

    explorer::SearchConfig scfg;
    std::string s_metric = "kd2n", s_boundary = "cylinder", s_orientation = "natural", s_policy = "independent-rows",
                s_rep = "auto", s_out;
    size_t s_jobs = 1, s_top = 0;
    bool s_no_distances = false;
    auto* search = app.add_subcommand("search", "Exhaustive sweep over patches and grids");
    search->add_option("--min-grid", scfg.min_grid)->capture_default_str();
    search->add_option("--max-grid", scfg.max_grid)->capture_default_str();
    search->add_option("--min-weight", scfg.min_weight)->capture_default_str();
    search->add_option("--max-weight", scfg.max_weight)->capture_default_str();
    search->add_option("--min-k", scfg.min_k)->capture_default_str();
    search->add_option("--min-d", scfg.min_d)->capture_default_str();
    search->add_option("--metric", s_metric, "kd2n | kn | dn")->capture_default_str();
    search->add_option("--k-budget", scfg.k_budget)->capture_default_str();
    search->add_option("--isd-iterations", scfg.isd_iterations)->capture_default_str();
    search->add_option("--seed", scfg.seed)->capture_default_str();
    search->add_option("--boundary", s_boundary)->capture_default_str();
    search->add_option("--orientation", s_orientation)->capture_default_str();
    search->add_option("--policy", s_policy)->capture_default_str();
    search->add_option("--rep", s_rep)->capture_default_str();
    search->add_option("--patch", scfg.patches, "Restrict to these patches (repeatable)");
    search->add_flag("--no-distances", s_no_distances, "Skip distance computation");
    search->add_option("--jobs", s_jobs, "Worker threads")->capture_default_str();
    search->add_option("--top", s_top, "Emit only the best N records (0 = all)")->capture_default_str();
    search->add_option("--out", s_out, "Write the report here instead of stdout");

    int f_row = 0;
    size_t f_l = 0, f_rep = 3;
    auto* families = app.add_subcommand("families", "Seed-family parameter calculator");
    families->add_option("--row", f_row, "Row 1..5 (0 lists all)")->capture_default_str();
    families->add_option("--l", f_l, "Family scale l >= 0")->capture_default_str();
    families->add_option("--rep", f_rep, "Repetition length L >= 2")->capture_default_str();

    size_t fib_size = 8;
    std::string fib_rep = "2";
    bool fib_distances = false;
    auto* fib = app.add_subcommand("fibonacci", "Fibonacci automaton code and its product");
    fib->add_option("--size", fib_size, "Array side l >= 4")->capture_default_str();
    fib->add_option("--rep", fib_rep, "Repetition length: auto or N")->capture_default_str();
    fib->add_flag("--distances", fib_distances, "Compute the classical distance");

    CodeOptions geo_opts;
    bool geo_interleave = true, geo_coords = false;
    auto* geometry = app.add_subcommand("geometry", "3D layout and locality of a product");
    add_product_options(geometry, geo_opts);
    geometry->add_flag("--interleave,!--no-interleave", geo_interleave, "Interleave the two blocks")
        ->capture_default_str();
    geometry->add_flag("--coords", geo_coords, "List qubit coordinates");

    CodeOptions exp_opts;
    std::string exp_format = "json", exp_out, exp_matrix = "classical";
    auto* exporter = app.add_subcommand("export", "Write a code as alist, JSON or graph text");
    add_product_options(exporter, exp_opts);
    exporter->add_option("--format", exp_format, "alist | json | graph")->capture_default_str();
    exporter->add_option("--matrix", exp_matrix, "For alist: classical | hx | hz")->capture_default_str();
    exporter->add_option("--out", exp_out, "Output path (default stdout)");

    std::string r_boundary = "cylinder", r_policy = "independent-rows", r_out;
    uint64_t r_iterations = 200, r_seed = 1;
    auto* report = app.add_subcommand("report", "Reproduce the published code entries");
    report->add_option("--boundary", r_boundary)->capture_default_str();
    report->add_option("--policy", r_policy)->capture_default_str();
    report->add_option("--isd-iterations", r_iterations)->capture_default_str();
    report->add_option("--seed", r_seed)->capture_default_str();
    report->add_option("--out", r_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*build) {
            auto patch = lattice::GeneratorPatch::parse(build_opts.patch);
            auto grid = grid_from(build_opts);
            auto s = lattice::classical_summary(lattice::build_translational(patch, grid), budget_from(build_opts));
            print_classical(patch.letters(), grid, s, out);
        } else if (*hgp_cmd) {
            Built b = build_product(hgp_opts);
            print_product(b.record, out);
            if (hgp_oracle) {
                auto o = hgp::distance_oracle_small(b.code);
                out << "oracle dx " << o.dx.to_string() << ", dz " << o.dz.to_string() << "\n";
            }
        } else if (*search) {
            scfg.metric = metrics::parse_metric(s_metric);
            scfg.boundary = lattice::parse_boundary(s_boundary);
            scfg.orientation = lattice::parse_orientation(s_orientation);
            scfg.row_policy = hgp::parse_row_policy(s_policy);
            scfg.fixed_rep = parse_rep(s_rep);
            scfg.compute_distances = !s_no_distances;
            auto result = explorer::search(scfg, s_jobs);
            ReportOptions ro;
            ro.metric = scfg.metric;
            ro.config = config_json(scfg);
            ro.limit = s_top;
            auto doc = emit_report(result.records, ro);
            doc["evaluated"] = result.evaluated;
            doc["skipped"] = result.skipped;
            doc["filtered"] = result.filtered;
            write_output(doc.dump(2) + "\n", s_out, out);
        } else if (*families) {
            auto emit = [&](const FamilyRow& row) {
                auto p = family_params(row, f_l, f_rep);
                out << "row " << row.row_id << " seed [" << row.n1.to_string() << "," << row.k1.to_string() << ","
                    << row.dz << "] l=" << f_l << " L=" << f_rep << ": n=" << p.n << " k=" << p.k << " dx=" << p.dx
                    << " dz=" << p.dz << " w=6 q=6\n";
                if (p.seed_k != p.k) {
                    out << "  note: published k column disagrees with the seed dimension k1=" << p.seed_k << "\n";
                }
            };
            if (f_row == 0) {
                for (const auto& row : family_rows()) {
                    emit(row);
                }
                const auto& fibf = fibonacci_family();
                out << "fibonacci seed " << fibf.seed << ": n=" << fibf.n << " k=" << fibf.k << " dx=" << fibf.dx
                    << " dz=" << fibf.dz << " w=" << fibf.check_weight << " q=" << fibf.qubit_weight << "\n";
            } else {
                emit(family_row(f_row));
            }
        } else if (*fib) {
            gf2::BitMatrix h = lattice::fibonacci_code(fib_size);
            lattice::DistanceBudget budget;
            budget.compute = fib_distances;
            auto s = lattice::classical_summary(h, budget);
            out << "fibonacci l=" << fib_size << " " << s.triple() << ", rows " << s.r << ", check weight "
                << s.check_weight << ", bit degree " << s.bit_degree << "\n";
            auto rep = parse_rep(fib_rep);
            size_t L = rep ? *rep : (s.d.value >= 2 && !s.d.is_infinite() ? s.d.value : 2);
            auto r = lattice::repetition_check_matrix(L);
            auto code = hgp::hypergraph_product(h, r);
            auto q = hgp::quantum_params(code, s, lattice::classical_summary(r));
            auto w = metrics::weight_profile(code);
            out << "product " << q.triple() << " with L=" << L << ", w=" << w.w << " qx=" << w.qx << " qz=" << w.qz
                << " q=" << w.q << "\n";
        } else if (*geometry) {
            Built b = build_product(geo_opts);
            auto lay = metrics::layout(b.code, geo_interleave);
            out << row_text(b.record, metrics::Metric::KD2N) << "\n";
            out << "bit/bit block " << lay.bitbit_dims.width << "x" << lay.bitbit_dims.height << "x"
                << lay.bitbit_dims.depth << " (" << b.code.n1 * b.code.n2 << " qubits)\n";
            out << "check/check block " << lay.checkcheck_dims.width << "x" << lay.checkcheck_dims.height << "x"
                << lay.checkcheck_dims.depth << " (" << b.code.r1 * b.code.r2 << " qubits)\n";
            out << (geo_interleave ? "interleaved" : "side by side") << ", locality radius " << lay.locality_radius
                << ", injective " << (lay.injective ? "yes" : "no") << "\n";
            for (const auto& note : lay.notes) {
                out << "note: " << note << "\n";
            }
            if (geo_coords) {
                for (size_t i = 0; i < lay.qubit_coordinates.size(); i++) {
                    const auto& p = lay.qubit_coordinates[i];
                    out << i << " " << p.x << " " << p.y << " " << p.z << "\n";
                }
            }
        } else if (*exporter) {
            if (exp_format == "alist") {
                std::string text;
                if (exp_matrix == "classical") {
                    auto patch = lattice::GeneratorPatch::parse(exp_opts.patch);
                    auto pm = hgp::policy_matrix(patch, grid_from(exp_opts), hgp::parse_row_policy(exp_opts.policy));
                    text = export_alist(pm.h);
                } else if (exp_matrix == "hx" || exp_matrix == "hz") {
                    Built b = build_product(exp_opts);
                    text = export_alist((exp_matrix == "hx" ? b.code.hx : b.code.hz).to_dense());
                } else {
                    throw ValidationError("--matrix must be classical, hx or hz");
                }
                write_output(text, exp_out, out);
            } else if (exp_format == "json") {
                Built b = build_product(exp_opts);
                write_output(record_json(b.record, metrics::Metric::KD2N).dump(2) + "\n", exp_out, out);
            } else if (exp_format == "graph") {
                Built b = build_product(exp_opts);
                write_output(metrics::tanner_export(b.code), exp_out, out);
            } else {
                throw ValidationError("--format must be alist, json or graph");
            }
        } else if (*report) {
            lattice::DistanceBudget budget;
            budget.isd_iterations = r_iterations;
            budget.seed = r_seed;
            auto doc = reference_report(lattice::parse_boundary(r_boundary), hgp::parse_row_policy(r_policy), budget);
            write_output(doc.dump(2) + "\n", r_out, out);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace locohgp::io
