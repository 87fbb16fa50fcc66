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

#include "locohgp/explorer/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "locohgp/errors.hpp"

namespace locohgp::explorer {

void SearchConfig::validate() const {
    if (min_grid < 1 || max_grid < min_grid) {
        throw ValidationError("grid range must satisfy 1 <= min_grid <= max_grid");
    }
    if (max_grid < 3) {
        throw ValidationError("max_grid must be at least 3");
    }
    if (min_weight < 1 || max_weight > 9 || min_weight > max_weight) {
        throw ValidationError("weight range must lie within [1, 9]");
    }
    if (fixed_rep && *fixed_rep < 2) {
        throw LengthTooSmall("repetition length must be at least 2");
    }
}

bool SearchRecord::exact() const {
    return (classical.d.exact || classical.d.is_infinite()) && (quantum.d.exact || quantum.d.is_infinite());
}

size_t SearchRecord::merit_distance() const {
    return quantum.d.is_infinite() ? 0 : quantum.d.value;
}

std::vector<lattice::GeneratorPatch> enumerate_patches(const SearchConfig& cfg) {
    std::set<std::string> wanted;
    for (const auto& s : cfg.patches) {
        wanted.insert(lattice::canonicalize(lattice::GeneratorPatch::parse(s)).letters());
    }
    std::set<uint16_t> masks;
    for (uint16_t m = 1; m < 512; m++) {
        auto p = lattice::GeneratorPatch::from_mask(m);
        if (p.weight() < cfg.min_weight || p.weight() > cfg.max_weight) {
            continue;
        }
        masks.insert(lattice::canonicalize(p).mask());
    }
    std::vector<lattice::GeneratorPatch> out;
    for (uint16_t m : masks) {
        auto p = lattice::GeneratorPatch::from_mask(m);
        if (wanted.empty() || wanted.count(p.letters())) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.letters() < b.letters(); });
    return out;
}

std::vector<std::pair<size_t, size_t>> sweep_grids(const SearchConfig& cfg) {
    bool symmetric = cfg.boundary != lattice::Boundary::Cylinder;
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t w = cfg.min_grid; w <= cfg.max_grid; w++) {
        for (size_t h = cfg.min_grid; h <= cfg.max_grid; h++) {
            if (!symmetric || w <= h) {
                out.emplace_back(w, h);
            }
        }
    }
    return out;
}

uint64_t record_seed(uint64_t seed, const lattice::GeneratorPatch& p, const lattice::GridSpec& g) {
    uint64_t x = lattice::mix_seed(seed);
    x = lattice::mix_seed(x ^ p.mask());
    x = lattice::mix_seed(x ^ (static_cast<uint64_t>(g.width) << 32 | g.height));
    return x;
}

SearchRecord evaluate(const lattice::GeneratorPatch& p, const lattice::GridSpec& grid, const SearchConfig& cfg) {
    lattice::check_grid(p, grid);
    SearchRecord rec;
    rec.patch = p.letters();
    rec.grid = grid;

    hgp::PolicyMatrix pm = hgp::policy_matrix(p, grid, cfg.row_policy);
    lattice::DistanceBudget budget;
    budget.k_budget = cfg.k_budget;
    budget.isd_iterations = cfg.isd_iterations;
    budget.seed = record_seed(cfg.seed, p, grid);
    budget.compute = cfg.compute_distances;
    rec.classical = lattice::classical_summary(pm.h, budget);

    if (cfg.fixed_rep) {
        rec.rep_length = *cfg.fixed_rep;
    } else if (rec.classical.k == 0 || !cfg.compute_distances) {
        rec.rep_length = 2;
    } else {
        rec.rep_length = hgp::choose_rep_length(rec.classical);
    }

    gf2::BitMatrix rep = lattice::repetition_check_matrix(rec.rep_length);
    lattice::ClassicalCodeSummary rep_summary = lattice::classical_summary(rep);
    hgp::CssCode code = hgp::hypergraph_product(pm.h, rep);
    code.provenance = hgp::Provenance{p, grid, rec.rep_length, cfg.row_policy, std::move(pm.anchors)};

    rec.quantum = hgp::quantum_params(code, rec.classical, rep_summary);
    rec.weights = metrics::weight_profile(code);
    rec.merit = metrics::figures_of_merit(rec.quantum.n, rec.quantum.k, rec.merit_distance());
    return rec;
}

bool ranks_before(const SearchRecord& a, const SearchRecord& b, metrics::Metric metric) {
    auto c = metrics::select(a.merit, metric) <=> metrics::select(b.merit, metric);
    if (c != 0) {
        return c > 0;
    }
    if (a.quantum.n != b.quantum.n) {
        return a.quantum.n < b.quantum.n;
    }
    if (a.patch != b.patch) {
        return a.patch < b.patch;
    }
    if (a.grid.width != b.grid.width) {
        return a.grid.width < b.grid.width;
    }
    return a.grid.height < b.grid.height;
}

SearchResult search(const SearchConfig& cfg, size_t jobs) {
    cfg.validate();
    auto patches = enumerate_patches(cfg);
    auto grids = sweep_grids(cfg);

    struct Task {
        size_t patch;
        size_t grid;
    };
    std::vector<Task> tasks;
    tasks.reserve(patches.size() * grids.size());
    for (size_t pi = 0; pi < patches.size(); pi++) {
        for (size_t gi = 0; gi < grids.size(); gi++) {
            tasks.push_back({pi, gi});
        }
    }

    std::vector<std::optional<SearchRecord>> slots(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) {
                return;
            }
            lattice::GridSpec g{grids[tasks[t].grid].first, grids[tasks[t].grid].second, cfg.boundary,
                                cfg.orientation};
            try {
                slots[t] = evaluate(patches[tasks[t].patch], g, cfg);
            } catch (const GridTooSmall&) {
                // Patch does not fit; counted as skipped.
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(tasks.size());
                return;
            }
        }
    };

    jobs = std::max<size_t>(1, std::min(jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (size_t i = 0; i < jobs; i++) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    SearchResult out;
    for (auto& slot : slots) {
        if (!slot) {
            out.skipped++;
            continue;
        }
        out.evaluated++;
        const SearchRecord& r = *slot;
        bool d_ok = r.quantum.d.is_infinite() || r.quantum.d.value >= cfg.min_d;
        if (r.quantum.k < cfg.min_k || !d_ok) {
            out.filtered++;
            continue;
        }
        out.records.push_back(std::move(*slot));
    }
    std::sort(out.records.begin(), out.records.end(),
              [&](const SearchRecord& a, const SearchRecord& b) { return ranks_before(a, b, cfg.metric); });
    return out;
}

}  // namespace locohgp::explorer
