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
#include <string_view>

namespace locohgp::simd {

/// Word type used by every bit-packed container in the library.
using Word = uint64_t;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// The inner loops of GF(2) elimination and weight enumeration.
///
/// Each variant operates on equally sized word ranges; callers guarantee
/// `dst.size() == src.size()` (checked only in debug builds).
struct KernelTable {
    Isa isa;
    /// dst ^= src
    void (*xor_into)(std::span<Word> dst, std::span<const Word> src);
    /// popcount(a)
    size_t (*popcount)(std::span<const Word> a);
    /// popcount(a ^ b)
    size_t (*xor_popcount)(std::span<const Word> a, std::span<const Word> b);
    /// dst ^= src, then popcount(dst)
    size_t (*xor_into_popcount)(std::span<Word> dst, std::span<const Word> src);
    /// parity of popcount(a & b), i.e. the GF(2) dot product
    bool (*and_parity)(std::span<const Word> a, std::span<const Word> b);
};

/// Variants compiled into this binary and supported by the running CPU.
bool isa_available(Isa isa);

/// The kernel table for a specific variant. Throws std::invalid_argument if
/// the variant is not available.
const KernelTable& kernels_for(Isa isa);

/// The active kernel table. Chosen once from CPU detection; the environment
/// variable LOCOHGP_ISA (scalar|avx2|neon) overrides the choice.
const KernelTable& kernels();

/// Replace the active kernel table (tests and benchmarks).
void force_isa(Isa isa);

Isa detect_best_isa();

namespace scalar {
extern const KernelTable table;
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
extern const KernelTable table;
}
#endif
#if defined(__aarch64__)
namespace neon {
extern const KernelTable table;
}
#endif

}  // namespace locohgp::simd
