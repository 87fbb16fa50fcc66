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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "locohgp/simd/kernels.hpp"

namespace locohgp::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(LOCOHGP_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(LOCOHGP_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("SIMD variant not available on this machine: " + std::string(isa_name(isa)));
    }
    switch (isa) {
#if defined(LOCOHGP_HAVE_AVX2)
        case Isa::Avx2:
            return avx2::table;
#endif
#if defined(LOCOHGP_HAVE_NEON)
        case Isa::Neon:
            return neon::table;
#endif
        default:
            return scalar::table;
    }
}

Isa detect_best_isa() {
    if (isa_available(Isa::Avx2)) {
        return Isa::Avx2;
    }
    if (isa_available(Isa::Neon)) {
        return Isa::Neon;
    }
    return Isa::Scalar;
}

namespace {

const KernelTable* initial_table() {
    Isa isa = detect_best_isa();
    if (const char* env = std::getenv("LOCOHGP_ISA")) {
        std::string want(env);
        if (want == "scalar") {
            isa = Isa::Scalar;
        } else if (want == "avx2" && isa_available(Isa::Avx2)) {
            isa = Isa::Avx2;
        } else if (want == "neon" && isa_available(Isa::Neon)) {
            isa = Isa::Neon;
        }
    }
    return &kernels_for(isa);
}

std::atomic<const KernelTable*>& active() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

const KernelTable& kernels() {
    return *active().load(std::memory_order_acquire);
}

void force_isa(Isa isa) {
    active().store(&kernels_for(isa), std::memory_order_release);
}

}  // namespace locohgp::simd
