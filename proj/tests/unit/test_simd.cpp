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

#include <stdexcept>
#include <doctest.h>

#include <random>
#include <vector>

#include "locohgp/simd/kernels.hpp"

using namespace locohgp::simd;

namespace {

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (isa_available(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

std::vector<Word> random_words(size_t n, std::mt19937_64& rng) {
    std::vector<Word> v(n);
    for (auto& w : v) {
        w = rng();
    }
    return v;
}

}  // namespace

TEST_CASE("scalar kernels are always available and selectable") {
    CHECK(isa_available(Isa::Scalar));
    CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
    CHECK(isa_name(Isa::Scalar) == "scalar");
    CHECK(isa_available(detect_best_isa()));
}

TEST_CASE("unavailable ISA is rejected") {
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (!isa_available(isa)) {
            CHECK_THROWS_AS(kernels_for(isa), std::invalid_argument);
        }
    }
}

TEST_CASE("every available ISA matches the scalar kernels") {
    std::mt19937_64 rng(7);
    const KernelTable& ref = kernels_for(Isa::Scalar);
    for (Isa isa : available()) {
        CAPTURE(isa_name(isa));
        const KernelTable& k = kernels_for(isa);
        for (size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257}) {
            CAPTURE(len);
            for (int rep = 0; rep < 8; rep++) {
                auto a = random_words(len, rng);
                auto b = random_words(len, rng);
                CHECK(k.popcount(a) == ref.popcount(a));
                CHECK(k.xor_popcount(a, b) == ref.xor_popcount(a, b));
                CHECK(k.and_parity(a, b) == ref.and_parity(a, b));

                auto d1 = a;
                auto d2 = a;
                k.xor_into(d1, b);
                ref.xor_into(d2, b);
                CHECK(d1 == d2);

                auto e1 = a;
                auto e2 = a;
                size_t w1 = k.xor_into_popcount(e1, b);
                size_t w2 = ref.xor_into_popcount(e2, b);
                CHECK(w1 == w2);
                CHECK(e1 == e2);
            }
        }
    }
}

TEST_CASE("scalar kernels agree with per-bit definitions") {
    std::mt19937_64 rng(11);
    const KernelTable& k = kernels_for(Isa::Scalar);
    auto a = random_words(5, rng);
    auto b = random_words(5, rng);
    size_t pop = 0, xpop = 0, dot = 0;
    for (size_t i = 0; i < 5 * 64; i++) {
        bool x = (a[i / 64] >> (i % 64)) & 1;
        bool y = (b[i / 64] >> (i % 64)) & 1;
        pop += x;
        xpop += x != y;
        dot += x && y;
    }
    CHECK(k.popcount(a) == pop);
    CHECK(k.xor_popcount(a, b) == xpop);
    CHECK(k.and_parity(a, b) == (dot % 2 == 1));
}

TEST_CASE("force_isa switches the active table") {
    Isa before = kernels().isa;
    force_isa(Isa::Scalar);
    CHECK(kernels().isa == Isa::Scalar);
    force_isa(before);
    CHECK(kernels().isa == before);
}
