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

#include "locohgp/hgp/product.hpp"

#include <algorithm>

#include "locohgp/errors.hpp"
#include "locohgp/gf2/linalg.hpp"

namespace locohgp::hgp {

std::string_view to_string(RowPolicy p) {
    return p == RowPolicy::AllTranslates ? "all-translates" : "independent-rows";
}

RowPolicy parse_row_policy(std::string_view s) {
    if (s == "all-translates" || s == "all") {
        return RowPolicy::AllTranslates;
    }
    if (s == "independent-rows" || s == "independent") {
        return RowPolicy::IndependentRows;
    }
    throw ValidationError("unknown row policy '" + std::string(s) + "' (all-translates|independent-rows)");
}

CssCode hypergraph_product(const gf2::BitMatrix& h1, const gf2::BitMatrix& h2) {
    CssCode c;
    c.n1 = h1.cols();
    c.r1 = h1.rows();
    c.n2 = h2.cols();
    c.r2 = h2.rows();
    c.n = c.n1 * c.n2 + c.r1 * c.r2;
    const size_t offset = c.n1 * c.n2;

    std::vector<std::vector<size_t>> h1_rows(c.r1);
    for (size_t a = 0; a < c.r1; a++) {
        h1_rows[a] = h1.row_support(a);
    }
    gf2::BitMatrix h1t = h1.transpose();
    gf2::BitMatrix h2t = h2.transpose();
    std::vector<std::vector<size_t>> h1_cols(c.n1);
    for (size_t i = 0; i < c.n1; i++) {
        h1_cols[i] = h1t.row_support(i);
    }
    std::vector<std::vector<size_t>> h2_rows(c.r2);
    for (size_t b = 0; b < c.r2; b++) {
        h2_rows[b] = h2.row_support(b);
    }
    std::vector<std::vector<size_t>> h2_cols(c.n2);
    for (size_t j = 0; j < c.n2; j++) {
        h2_cols[j] = h2t.row_support(j);
    }

    // Both blocks are emitted in ascending column order: the bit/bit block
    // indices lie below `offset`, the check/check block above it.
    c.hx = gf2::SparseBitMatrix(0, c.n);
    std::vector<uint32_t> support;
    for (size_t a = 0; a < c.r1; a++) {
        for (size_t j = 0; j < c.n2; j++) {
            support.clear();
            for (size_t i : h1_rows[a]) {
                support.push_back(static_cast<uint32_t>(i * c.n2 + j));
            }
            for (size_t b : h2_cols[j]) {
                support.push_back(static_cast<uint32_t>(offset + a * c.r2 + b));
            }
            c.hx.append_row(support);
        }
    }
    c.hz = gf2::SparseBitMatrix(0, c.n);
    for (size_t i = 0; i < c.n1; i++) {
        for (size_t b = 0; b < c.r2; b++) {
            support.clear();
            for (size_t j : h2_rows[b]) {
                support.push_back(static_cast<uint32_t>(i * c.n2 + j));
            }
            for (size_t a : h1_cols[i]) {
                support.push_back(static_cast<uint32_t>(offset + a * c.r2 + b));
            }
            c.hz.append_row(support);
        }
    }
    css_validate(c);
    return c;
}

std::optional<std::pair<size_t, size_t>> css_violation(const CssCode& c) {
    if (c.hx.cols() != c.n || c.hz.cols() != c.n) {
        throw OrthogonalityViolation("check matrices do not match the qubit count");
    }
    gf2::SparseBitMatrix z_by_qubit = c.hz.transpose();
    std::vector<uint8_t> parity(c.hz.rows(), 0);
    std::vector<size_t> touched;
    for (size_t a = 0; a < c.hx.rows(); a++) {
        touched.clear();
        for (uint32_t q : c.hx.row(a)) {
            for (uint32_t b : z_by_qubit.row(q)) {
                if (parity[b] == 0) {
                    touched.push_back(b);
                }
                parity[b] ^= 1;
            }
        }
        std::optional<size_t> first;
        for (size_t b : touched) {
            if (parity[b] != 0 && (!first || b < *first)) {
                first = b;
            }
            parity[b] = 0;
        }
        if (first) {
            return std::make_pair(a, *first);
        }
    }
    return std::nullopt;
}

void css_validate(const CssCode& c) {
    if (auto bad = css_violation(c)) {
        throw OrthogonalityViolation("X check " + std::to_string(bad->first) + " anticommutes with Z check " +
                                     std::to_string(bad->second));
    }
}

std::string QuantumParams::triple() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d.value == 0 ? "?" : d.to_string()) + "]]";
}

namespace {

double elimination_cost(const gf2::SparseBitMatrix& m) {
    double rows = static_cast<double>(m.rows());
    return rows * rows * static_cast<double>(gf2::words_for(m.cols()));
}

// Distances of one family of logical operators, present only when both
// dimensions in the family's tensor factor are nonzero.
gf2::DistanceResult family_distance(size_t dim_a, size_t dim_b, const gf2::DistanceResult& d) {
    return (dim_a > 0 && dim_b > 0) ? d : gf2::DistanceResult::infinite();
}

}  // namespace

QuantumParams quantum_params(const CssCode& c, const lattice::ClassicalCodeSummary& s1,
                             const lattice::ClassicalCodeSummary& s2, const QuantumParamsOptions& options) {
    if (s1.n != c.n1 || s1.r != c.r1 || s2.n != c.n2 || s2.r != c.r2) {
        throw ValidationError("classical summaries do not describe the factors of this product");
    }
    QuantumParams q;
    q.n = c.n;
    q.k = s1.k * s2.k + s1.k_t * s2.k_t;

    if (elimination_cost(c.hx) <= options.rank_check_cost_limit &&
        elimination_cost(c.hz) <= options.rank_check_cost_limit) {
        size_t rank_x = gf2::rank(c.hx.to_dense());
        size_t rank_z = gf2::rank(c.hz.to_dense());
        size_t k_rank = c.n - rank_x - rank_z;
        if (k_rank != q.k) {
            throw FormulaRankMismatch("rank-based k = " + std::to_string(k_rank) + " but k1 k2 + k1^T k2^T = " +
                                      std::to_string(q.k));
        }
        q.rank_checked = true;
    }

    q.dx = gf2::min_distance(family_distance(s1.k, s2.k, s2.d), family_distance(s1.k_t, s2.k_t, s1.d_t));
    q.dz = gf2::min_distance(family_distance(s1.k, s2.k, s1.d), family_distance(s1.k_t, s2.k_t, s2.d_t));
    q.d = gf2::min_distance(q.dx, q.dz);
    return q;
}

size_t choose_rep_length(const lattice::ClassicalCodeSummary& s1) {
    if (s1.d.is_infinite()) {
        throw InfiniteDistance("code has k = 0; no repetition length matches an infinite distance");
    }
    return std::max<size_t>(2, s1.d.value);
}

PolicyMatrix policy_matrix(const lattice::GeneratorPatch& p, const lattice::GridSpec& g, RowPolicy policy) {
    PolicyMatrix out{lattice::build_translational(p, g), lattice::check_anchors(p, g)};
    if (policy == RowPolicy::IndependentRows) {
        auto keep = gf2::independent_row_indices(out.h);
        if (keep.size() != out.h.rows()) {
            std::vector<lattice::Cell> anchors;
            anchors.reserve(keep.size());
            for (size_t r : keep) {
                anchors.push_back(out.anchors[r]);
            }
            out.h = out.h.select_rows(keep);
            out.anchors = std::move(anchors);
        }
    }
    return out;
}

CssCode patch_product(const lattice::GeneratorPatch& p, const lattice::GridSpec& g, size_t rep_length,
                      RowPolicy policy) {
    PolicyMatrix h1 = policy_matrix(p, g, policy);
    CssCode c = hypergraph_product(h1.h, lattice::repetition_check_matrix(rep_length));
    c.provenance = Provenance{p, g, rep_length, policy, std::move(h1.anchors)};
    return c;
}

}  // namespace locohgp::hgp
