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

// AVX2 variants. This translation unit is compiled with -mavx2 -mpopcnt and
// must only be entered after dispatch has confirmed CPU support.

#include <immintrin.h>

#include <bit>
#include <cassert>

#include "locohgp/simd/kernels.hpp"

namespace locohgp::simd::avx2 {
namespace {

constexpr size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount (Mula et al.): per-byte counts via vpshufb, then a
// horizontal byte sum into the four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline size_t horizontal_sum(__m256i acc) {
    alignas(32) uint64_t lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void xor_into(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    size_t n = dst.size();
    size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        store(&dst[i], _mm256_xor_si256(load(&dst[i]), load(&src[i])));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

size_t popcount(std::span<const Word> a) {
    size_t n = a.size();
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) {
        acc = _mm256_add_epi64(acc, popcount_lanes(load(&a[i])));
    }
    size_t total = horizontal_sum(acc);
    for (; i < n; i++) {
        total += static_cast<size_t>(_mm_popcnt_u64(a[i]));
    }
    return total;
}

size_t xor_popcount(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    size_t n = a.size();
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_xor_si256(load(&a[i]), load(&b[i]))));
    }
    size_t total = horizontal_sum(acc);
    for (; i < n; i++) {
        total += static_cast<size_t>(_mm_popcnt_u64(a[i] ^ b[i]));
    }
    return total;
}

size_t xor_into_popcount(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    size_t n = dst.size();
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) {
        __m256i v = _mm256_xor_si256(load(&dst[i]), load(&src[i]));
        store(&dst[i], v);
        acc = _mm256_add_epi64(acc, popcount_lanes(v));
    }
    size_t total = horizontal_sum(acc);
    for (; i < n; i++) {
        dst[i] ^= src[i];
        total += static_cast<size_t>(_mm_popcnt_u64(dst[i]));
    }
    return total;
}

bool and_parity(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    size_t n = a.size();
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + kLanes <= n; i += kLanes) {
        acc = _mm256_xor_si256(acc, _mm256_and_si256(load(&a[i]), load(&b[i])));
    }
    alignas(32) uint64_t lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Word folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return (_mm_popcnt_u64(folded) & 1) != 0;
}

}  // namespace

const KernelTable table{
    Isa::Avx2, xor_into, popcount, xor_popcount, xor_into_popcount, and_parity,
};

}  // namespace locohgp::simd::avx2
