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

// Reference implementations. Every SIMD variant is tested for bit-exact
// agreement with these.

#include <bit>
#include <cassert>

#include "locohgp/simd/kernels.hpp"

namespace locohgp::simd::scalar {
namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    for (size_t i = 0; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

size_t popcount(std::span<const Word> a) {
    size_t total = 0;
    for (Word w : a) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

size_t xor_popcount(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    size_t total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += static_cast<size_t>(std::popcount(a[i] ^ b[i]));
    }
    return total;
}

size_t xor_into_popcount(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    size_t total = 0;
    for (size_t i = 0; i < dst.size(); i++) {
        dst[i] ^= src[i];
        total += static_cast<size_t>(std::popcount(dst[i]));
    }
    return total;
}

bool and_parity(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    Word acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc ^= a[i] & b[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

}  // namespace

const KernelTable table{
    Isa::Scalar, xor_into, popcount, xor_popcount, xor_into_popcount, and_parity,
};

}  // namespace locohgp::simd::scalar
