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

#include "locohgp/gf2/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace locohgp::gf2 {

SparseBitMatrix::SparseBitMatrix(size_t rows, size_t cols) : cols_(cols), row_start_(rows + 1, 0) {}

SparseBitMatrix SparseBitMatrix::from_dense(const BitMatrix& m) {
    SparseBitMatrix s(0, m.cols());
    std::vector<uint32_t> support;
    for (size_t r = 0; r < m.rows(); r++) {
        support.clear();
        for (size_t c : m.row_support(r)) {
            support.push_back(static_cast<uint32_t>(c));
        }
        s.append_row(support);
    }
    return s;
}

void SparseBitMatrix::append_row(std::span<const uint32_t> support) {
    for (size_t i = 0; i < support.size(); i++) {
        if (support[i] >= cols_ || (i > 0 && support[i] <= support[i - 1])) {
            throw std::invalid_argument("sparse row support must be ascending and in range");
        }
    }
    entries_.insert(entries_.end(), support.begin(), support.end());
    row_start_.push_back(entries_.size());
}

size_t SparseBitMatrix::max_row_weight() const {
    size_t best = 0;
    for (size_t r = 0; r < rows(); r++) {
        best = std::max(best, row_weight(r));
    }
    return best;
}

std::vector<size_t> SparseBitMatrix::column_weights() const {
    std::vector<size_t> weights(cols_, 0);
    for (uint32_t c : entries_) {
        weights[c]++;
    }
    return weights;
}

SparseBitMatrix SparseBitMatrix::transpose() const {
    std::vector<size_t> counts = column_weights();
    SparseBitMatrix t;
    t.cols_ = rows();
    t.row_start_.assign(cols_ + 1, 0);
    for (size_t c = 0; c < cols_; c++) {
        t.row_start_[c + 1] = t.row_start_[c] + counts[c];
    }
    t.entries_.resize(entries_.size());
    std::vector<size_t> fill(t.row_start_.begin(), t.row_start_.end() - 1);
    // Rows visited in ascending order keep each transposed row sorted.
    for (size_t r = 0; r < rows(); r++) {
        for (uint32_t c : row(r)) {
            t.entries_[fill[c]++] = static_cast<uint32_t>(r);
        }
    }
    return t;
}

BitMatrix SparseBitMatrix::to_dense() const {
    BitMatrix m(rows(), cols_);
    for (size_t r = 0; r < rows(); r++) {
        for (uint32_t c : row(r)) {
            m.set(r, c);
        }
    }
    return m;
}

}  // namespace locohgp::gf2
