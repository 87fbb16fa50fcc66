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

// NEON variants (AArch64 only; NEON is mandatory there).

#include <arm_neon.h>

#include <bit>
#include <cassert>

#include "locohgp/simd/kernels.hpp"

namespace locohgp::simd::neon {
namespace {

constexpr size_t kLanes = 2;

inline uint64_t lane_popcount(uint64x2_t v) {
    return vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

void xor_into(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        vst1q_u64(&dst[i], veorq_u64(vld1q_u64(&dst[i]), vld1q_u64(&src[i])));
    }
    for (; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

size_t popcount(std::span<const Word> a) {
    size_t total = 0;
    size_t i = 0;
    for (; i + kLanes <= a.size(); i += kLanes) {
        total += lane_popcount(vld1q_u64(&a[i]));
    }
    for (; i < a.size(); i++) {
        total += static_cast<size_t>(std::popcount(a[i]));
    }
    return total;
}

size_t xor_popcount(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    size_t total = 0;
    size_t i = 0;
    for (; i + kLanes <= a.size(); i += kLanes) {
        total += lane_popcount(veorq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
    }
    for (; i < a.size(); i++) {
        total += static_cast<size_t>(std::popcount(a[i] ^ b[i]));
    }
    return total;
}

size_t xor_into_popcount(std::span<Word> dst, std::span<const Word> src) {
    assert(dst.size() == src.size());
    size_t total = 0;
    size_t i = 0;
    for (; i + kLanes <= dst.size(); i += kLanes) {
        uint64x2_t v = veorq_u64(vld1q_u64(&dst[i]), vld1q_u64(&src[i]));
        vst1q_u64(&dst[i], v);
        total += lane_popcount(v);
    }
    for (; i < dst.size(); i++) {
        dst[i] ^= src[i];
        total += static_cast<size_t>(std::popcount(dst[i]));
    }
    return total;
}

bool and_parity(std::span<const Word> a, std::span<const Word> b) {
    assert(a.size() == b.size());
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + kLanes <= a.size(); i += kLanes) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
    }
    Word folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < a.size(); i++) {
        folded ^= a[i] & b[i];
    }
    return (std::popcount(folded) & 1) != 0;
}

}  // namespace

const KernelTable table{
    Isa::Neon, xor_into, popcount, xor_popcount, xor_into_popcount, and_parity,
};

}  // namespace locohgp::simd::neon
