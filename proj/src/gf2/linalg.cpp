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

#include "locohgp/gf2/linalg.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace locohgp::gf2 {

RowEchelon row_reduce(BitMatrix m, std::span<const size_t> column_order) {
    const auto& k = simd::kernels();
    std::vector<size_t> order;
    if (column_order.empty()) {
        order.resize(m.cols());
        std::iota(order.begin(), order.end(), size_t{0});
        column_order = order;
    } else if (column_order.size() != m.cols()) {
        throw std::invalid_argument("column order must list every column once");
    }

    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t col : column_order) {
        if (next_row == m.rows()) {
            break;
        }
        size_t pivot_row = next_row;
        while (pivot_row < m.rows() && !m.get(pivot_row, col)) {
            pivot_row++;
        }
        if (pivot_row == m.rows()) {
            continue;
        }
        m.swap_rows(pivot_row, next_row);
        auto pivot = m.row(next_row);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next_row && m.get(r, col)) {
                k.xor_into(m.row(r), pivot);
            }
        }
        pivots.push_back(col);
        next_row++;
    }

    std::vector<size_t> keep(pivots.size());
    std::iota(keep.begin(), keep.end(), size_t{0});
    return RowEchelon{m.select_rows(keep), std::move(pivots)};
}

size_t rank(const BitMatrix& m) {
    // Elimination without the bookkeeping of row_reduce.
    BitMatrix work = m;
    const auto& k = simd::kernels();
    size_t r = 0;
    for (size_t col = 0; col < work.cols() && r < work.rows(); col++) {
        size_t p = r;
        while (p < work.rows() && !work.get(p, col)) {
            p++;
        }
        if (p == work.rows()) {
            continue;
        }
        work.swap_rows(p, r);
        for (size_t i = r + 1; i < work.rows(); i++) {
            if (work.get(i, col)) {
                k.xor_into(work.row(i), work.row(r));
            }
        }
        r++;
    }
    return r;
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    basis.reserve(m.cols() - e.rank());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f);
        for (size_t i = 0; i < e.rank(); i++) {
            if (e.reduced.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void EchelonBasis::reduce(std::span<Word> v) const {
    const auto& k = simd::kernels();
    for (size_t i = 0; i < pivots_.size(); i++) {
        size_t p = pivots_[i];
        if ((v[p / kWordBits] >> (p % kWordBits)) & 1) {
            k.xor_into(v, rows_.row(i));
        }
    }
}

bool EchelonBasis::contains(const BitVector& v) const {
    if (v.size() != width_) {
        throw std::invalid_argument("vector width does not match basis");
    }
    BitVector residual = v;
    reduce(residual.words());
    return residual.is_zero();
}

bool EchelonBasis::insert(const BitVector& v) {
    if (v.size() != width_) {
        throw std::invalid_argument("vector width does not match basis");
    }
    BitVector residual = v;
    reduce(residual.words());
    auto words = residual.words();
    for (size_t w = 0; w < words.size(); w++) {
        if (words[w] != 0) {
            pivots_.push_back(w * kWordBits + static_cast<size_t>(std::countr_zero(words[w])));
            rows_.append_row(residual);
            return true;
        }
    }
    return false;
}

std::vector<size_t> independent_row_indices(const BitMatrix& m) {
    EchelonBasis basis(m.cols());
    std::vector<size_t> kept;
    for (size_t r = 0; r < m.rows(); r++) {
        if (basis.insert(m.row_vector(r))) {
            kept.push_back(r);
        }
    }
    return kept;
}

BitMatrix independent_rows(const BitMatrix& m) {
    auto kept = independent_row_indices(m);
    return m.select_rows(kept);
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    EchelonBasis basis_a(a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        basis_a.insert(a.row_vector(r));
    }
    EchelonBasis basis_b(b.cols());
    for (size_t r = 0; r < b.rows(); r++) {
        basis_b.insert(b.row_vector(r));
    }
    if (basis_a.size() != basis_b.size()) {
        return false;
    }
    for (size_t r = 0; r < b.rows(); r++) {
        if (!basis_a.contains(b.row_vector(r))) {
            return false;
        }
    }
    return true;
}

}  // namespace locohgp::gf2
