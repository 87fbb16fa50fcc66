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

#include "locohgp/gf2/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace locohgp::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

size_t BitVector::weight() const {
    return simd::kernels().popcount(words_);
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    simd::kernels().xor_into(words_, other.words_);
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged rows in BitMatrix::from_strings");
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch == '1') {
                m.set(r, c);
            } else if (ch != '0') {
                throw std::invalid_argument("bit string may only contain '0' and '1'");
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_supports(size_t cols, const std::vector<std::vector<size_t>>& rows) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c : rows[r]) {
            if (c >= cols) {
                throw std::out_of_range("column index out of range");
            }
            m.flip(r, c);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_vectors(size_t cols, const std::vector<BitVector>& rows) {
    BitMatrix m(0, cols);
    m.data_.reserve(rows.size() * m.stride_);
    for (const auto& v : rows) {
        if (v.size() != cols) {
            throw std::invalid_argument("BitVector length does not match matrix width");
        }
        m.append_row(v);
    }
    return m;
}

BitVector BitMatrix::row_vector(size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

std::vector<size_t> BitMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    auto words = row(r);
    for (size_t w = 0; w < words.size(); w++) {
        Word bits = words[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

void BitMatrix::xor_row_into(size_t dst, size_t src) {
    simd::kernels().xor_into(row(dst), row(src));
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + static_cast<ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<ptrdiff_t>(b * stride_));
}

void BitMatrix::append_row(std::span<const Word> words) {
    if (words.size() != stride_) {
        throw std::invalid_argument("row width does not match matrix");
    }
    data_.insert(data_.end(), words.begin(), words.end());
    rows_++;
}

size_t BitMatrix::row_weight(size_t r) const {
    return simd::kernels().popcount(row(r));
}

size_t BitMatrix::max_row_weight() const {
    size_t best = 0;
    for (size_t r = 0; r < rows_; r++) {
        best = std::max(best, row_weight(r));
    }
    return best;
}

std::vector<size_t> BitMatrix::column_weights() const {
    std::vector<size_t> weights(cols_, 0);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row(r);
        for (size_t w = 0; w < stride_; w++) {
            Word bits = words[w];
            while (bits) {
                weights[w * kWordBits + static_cast<size_t>(std::countr_zero(bits))]++;
                bits &= bits - 1;
            }
        }
    }
    return weights;
}

size_t BitMatrix::max_column_weight() const {
    auto weights = column_weights();
    return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row(r);
        for (size_t w = 0; w < stride_; w++) {
            Word bits = words[w];
            while (bits) {
                t.set(w * kWordBits + static_cast<size_t>(std::countr_zero(bits)), r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::select_rows(std::span<const size_t> indices) const {
    BitMatrix out(0, cols_);
    out.data_.reserve(indices.size() * stride_);
    for (size_t r : indices) {
        out.append_row(row(r));
    }
    return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match matrix width");
    }
    const auto& k = simd::kernels();
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (k.and_parity(row(r), v.words())) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::multiply_transpose(const BitMatrix& other) const {
    if (other.cols_ != cols_) {
        throw std::invalid_argument("matrix widths differ in multiply_transpose");
    }
    const auto& k = simd::kernels();
    BitMatrix out(rows_, other.rows_);
    for (size_t a = 0; a < rows_; a++) {
        for (size_t b = 0; b < other.rows_; b++) {
            if (k.and_parity(row(a), other.row(b))) {
                out.set(a, b);
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s += get(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

}  // namespace locohgp::gf2
