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
#include <cstdint>
#include <vector>

#include "locohgp/gf2/bit_matrix.hpp"

namespace locohgp::gf2 {

/// Row-support (CSR) form of a GF(2) matrix. Used for hypergraph products,
/// whose dense form grows quadratically with the repetition length while the
/// row weight stays constant.
class SparseBitMatrix {
   public:
    SparseBitMatrix() = default;
    SparseBitMatrix(size_t rows, size_t cols);

    static SparseBitMatrix from_dense(const BitMatrix& m);

    size_t rows() const { return row_start_.size() - 1; }
    size_t cols() const { return cols_; }
    size_t nonzeros() const { return entries_.size(); }

    /// Column indices of row r, ascending.
    std::span<const uint32_t> row(size_t r) const {
        return {entries_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
    }

    /// Appends a row; `support` must be strictly ascending.
    void append_row(std::span<const uint32_t> support);

    size_t row_weight(size_t r) const { return row_start_[r + 1] - row_start_[r]; }
    size_t max_row_weight() const;
    std::vector<size_t> column_weights() const;

    SparseBitMatrix transpose() const;
    BitMatrix to_dense() const;

    bool operator==(const SparseBitMatrix& other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<size_t> row_start_{0};
    std::vector<uint32_t> entries_;
};

}  // namespace locohgp::gf2
