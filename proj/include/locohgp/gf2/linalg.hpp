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
#include <span>
#include <vector>

#include "locohgp/gf2/bit_matrix.hpp"

namespace locohgp::gf2 {

/// Reduced row echelon form: `reduced` holds exactly rank rows, row i having
/// its leading one at column pivots[i]; every pivot column is zero outside
/// its own row.
struct RowEchelon {
    BitMatrix reduced;
    std::vector<size_t> pivots;

    size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. When `column_order` is given, pivot columns are
/// searched in that order instead of ascending index order.
RowEchelon row_reduce(BitMatrix m, std::span<const size_t> column_order = {});

size_t rank(const BitMatrix& m);

/// Basis of {v : m v = 0}, one vector per non-pivot column of the RREF, in
/// ascending free-column order. Vector j has a single one among the free
/// columns, at free column j.
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

/// Indices of a maximal independent subset of rows, chosen greedily in
/// ascending row order.
std::vector<size_t> independent_row_indices(const BitMatrix& m);

/// The rows at independent_row_indices(m), in that order.
BitMatrix independent_rows(const BitMatrix& m);

/// True when both matrices have the same width and span the same row space.
bool same_row_space(const BitMatrix& a, const BitMatrix& b);

/// Incrementally built echelon basis; answers span-membership queries and
/// reports whether appended vectors were new.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t width) : width_(width), rows_(0, width) {}

    size_t width() const { return width_; }
    size_t size() const { return pivots_.size(); }

    /// Reduces v against the basis in place; v ends up zero iff it was in the span.
    void reduce(std::span<Word> v) const;
    bool contains(const BitVector& v) const;
    /// Adds v if it is independent of the current basis. Returns true if added.
    bool insert(const BitVector& v);

   private:
    size_t width_;
    BitMatrix rows_;
    std::vector<size_t> pivots_;
};

}  // namespace locohgp::gf2
