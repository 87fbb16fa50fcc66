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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locohgp/gf2/bit_matrix.hpp"
#include "locohgp/gf2/distance.hpp"
#include "locohgp/gf2/sparse_matrix.hpp"
#include "locohgp/lattice/patch.hpp"
#include "locohgp/lattice/summary.hpp"
#include "locohgp/lattice/translational.hpp"

namespace locohgp::hgp {

/// Which rows of the 2D code's check matrix enter the product.
enum class RowPolicy { AllTranslates, IndependentRows };

std::string_view to_string(RowPolicy p);
RowPolicy parse_row_policy(std::string_view s);

/// Where a product came from, when it was built from a generator patch.
struct Provenance {
    lattice::GeneratorPatch patch;
    lattice::GridSpec grid;
    size_t rep_length = 0;
    RowPolicy policy = RowPolicy::IndependentRows;
    /// Anchor cell of each row of the H1 actually used, in row order.
    std::vector<lattice::Cell> anchors;
};

/// CSS code from the hypergraph product of H1 (r1 x n1) and H2 (r2 x n2):
///
///     hx = ( H1 (x) I_n2  |  I_r1 (x) H2^T )
///     hz = ( I_n1 (x) H2  |  H1^T (x) I_r2 )
///
/// Qubit (i, j) of the bit/bit block has index i * n2 + j; qubit (a, b) of the
/// check/check block has index n1 * n2 + a * r2 + b. X check (a, j) is row
/// a * n2 + j of hx; Z check (i, b) is row i * r2 + b of hz.
struct CssCode {
    size_t n = 0;
    gf2::SparseBitMatrix hx;
    gf2::SparseBitMatrix hz;
    size_t n1 = 0;
    size_t r1 = 0;
    size_t n2 = 0;
    size_t r2 = 0;
    std::optional<Provenance> provenance;
};

/// Builds the product and checks CSS orthogonality (OrthogonalityViolation
/// on failure, which would indicate a construction bug).
CssCode hypergraph_product(const gf2::BitMatrix& h1, const gf2::BitMatrix& h2);

/// First (X row, Z row) pair with odd overlap, if any.
std::optional<std::pair<size_t, size_t>> css_violation(const CssCode& c);

/// Throws OrthogonalityViolation naming the first violating pair.
void css_validate(const CssCode& c);

struct QuantumParams {
    size_t n = 0;
    size_t k = 0;
    /// min(d2 [if k1 k2 > 0], d1^T [if k1^T k2^T > 0]); carries the repetition
    /// distance when H2 is a repetition code.
    gf2::DistanceResult dx;
    /// min(d1 [if k1 k2 > 0], d2^T [if k1^T k2^T > 0]).
    gf2::DistanceResult dz;
    gf2::DistanceResult d;
    /// Whether k was also obtained as n - rank(hx) - rank(hz).
    bool rank_checked = false;

    /// "[[n,k,d]]"
    std::string triple() const;
};

struct QuantumParamsOptions {
    /// Skip the dense rank cross-check when rows^2 * words_per_row of either
    /// check matrix exceeds this.
    double rank_check_cost_limit = 4e9;
};

/// Parameters of a product whose factors are described by s1 and s2 (which
/// must summarize the exact matrices used). Throws FormulaRankMismatch if
/// the rank-based and formula dimensions disagree.
QuantumParams quantum_params(const CssCode& c, const lattice::ClassicalCodeSummary& s1,
                             const lattice::ClassicalCodeSummary& s2, const QuantumParamsOptions& options = {});

/// Repetition length matching the 2D code's distance (at least 2). Throws
/// InfiniteDistance when the code has k = 0.
size_t choose_rep_length(const lattice::ClassicalCodeSummary& s1);

/// H1 for a patch under a row policy, plus its row anchors.
struct PolicyMatrix {
    gf2::BitMatrix h;
    std::vector<lattice::Cell> anchors;
};
PolicyMatrix policy_matrix(const lattice::GeneratorPatch& p, const lattice::GridSpec& g, RowPolicy policy);

/// hypergraph_product(policy H1, repetition(rep_length)) with provenance.
CssCode patch_product(const lattice::GeneratorPatch& p, const lattice::GridSpec& g, size_t rep_length,
                      RowPolicy policy);

}  // namespace locohgp::hgp
