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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locohgp/simd/kernels.hpp"

namespace locohgp::gf2 {

using simd::Word;

constexpr size_t kWordBits = 64;

constexpr size_t words_for(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// A GF(2) vector packed 64 bits per word. Bits past size() in the last word
/// are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t size) : size_(size), words_(words_for(size), 0) {}

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);

    size_t size() const { return size_; }
    bool get(size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1; }
    void set(size_t i, bool value = true) {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> support() const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    BitVector& operator^=(const BitVector& other);
    bool operator==(const BitVector& other) const = default;

    std::string to_string() const;

   private:
    size_t size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix, each row padded to whole words. The padding
/// bits past cols() in each row are kept zero, so word-wise kernels can run
/// over full rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// One string of '0'/'1' per row; all rows must share a length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    /// Rows given as column-index lists.
    static BitMatrix from_supports(size_t cols, const std::vector<std::vector<size_t>>& rows);
    static BitMatrix from_vectors(size_t cols, const std::vector<BitVector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return stride_; }
    bool empty() const { return rows_ == 0; }

    bool get(size_t r, size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(size_t r, size_t c, bool value = true) {
        Word mask = Word{1} << (c % kWordBits);
        Word& w = data_[r * stride_ + c / kWordBits];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(size_t r) const { return {data_.data() + r * stride_, stride_}; }
    BitVector row_vector(size_t r) const;
    std::vector<size_t> row_support(size_t r) const;

    void xor_row_into(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    void append_row(std::span<const Word> words);
    void append_row(const BitVector& v) { append_row(v.words()); }

    size_t row_weight(size_t r) const;
    size_t max_row_weight() const;
    std::vector<size_t> column_weights() const;
    size_t max_column_weight() const;

    BitMatrix transpose() const;
    /// Rows selected by index, in the given order.
    BitMatrix select_rows(std::span<const size_t> indices) const;

    /// this * v over GF(2); v.size() must equal cols().
    BitVector multiply(const BitVector& v) const;
    /// this * other^T; both operands must share cols().
    BitMatrix multiply_transpose(const BitMatrix& other) const;
    bool is_zero() const;

    bool operator==(const BitMatrix& other) const = default;
    std::string to_string() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<Word> data_;
};

}  // namespace locohgp::gf2
