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

#include "locohgp/gf2/distance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "locohgp/errors.hpp"
#include "locohgp/gf2/linalg.hpp"

namespace locohgp::gf2 {

std::string DistanceResult::to_string() const {
    if (is_infinite()) {
        return "inf";
    }
    if (value == 0) {
        return "?";
    }
    return (exact ? "" : "<=") + std::to_string(value);
}

DistanceResult min_distance(const DistanceResult& a, const DistanceResult& b) {
    if (a.is_infinite()) {
        return b;
    }
    if (b.is_infinite()) {
        return a;
    }
    DistanceResult out = a.value <= b.value ? a : b;
    out.exact = a.exact && b.exact;
    return out;
}

DistanceResult min_weight_exact(const BitMatrix& m, size_t k_budget) {
    std::vector<BitVector> basis = nullspace_basis(m);
    size_t k = basis.size();
    if (k == 0) {
        return DistanceResult::infinite();
    }
    if (k > k_budget) {
        throw BudgetExceeded("kernel dimension " + std::to_string(k) + " exceeds exact budget " +
                             std::to_string(k_budget));
    }
    if (k >= 63) {
        throw BudgetExceeded("kernel dimension too large for exhaustive enumeration");
    }

    const auto& kern = simd::kernels();
    const size_t stride = words_for(m.cols());
    std::vector<Word> flat(k * stride);
    for (size_t j = 0; j < k; j++) {
        std::copy(basis[j].words().begin(), basis[j].words().end(), flat.begin() + static_cast<ptrdiff_t>(j * stride));
    }

    std::vector<Word> current(stride, 0);
    const uint64_t total = (uint64_t{1} << k) - 1;
    size_t best = DistanceResult::kInfinity;
    uint64_t best_step = 0;
    uint64_t step = 1;
    for (; step <= total; step++) {
        size_t j = static_cast<size_t>(std::countr_zero(step));
        size_t w = kern.xor_into_popcount(current, std::span<const Word>(flat.data() + j * stride, stride));
        if (w < best) {
            best = w;
            best_step = step;
            if (best == 1) {
                break;
            }
        }
    }

    DistanceResult result;
    result.value = best;
    result.exact = true;
    result.iterations_used = std::min(step, total);
    BitVector witness(m.cols());
    uint64_t gray = best_step ^ (best_step >> 1);
    for (size_t j = 0; j < k; j++) {
        if ((gray >> j) & 1) {
            witness ^= basis[j];
        }
    }
    result.witness = std::move(witness);
    return result;
}

namespace {

// Uniform draw in [0, bound) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so runs reproduce across standard libraries.
uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

DistanceResult min_weight_isd(const BitMatrix& m, uint64_t iterations, uint64_t seed) {
    BitMatrix base = independent_rows(m);
    const size_t n = m.cols();
    const size_t r = base.rows();
    if (r == n) {
        return DistanceResult::infinite();
    }

    // At least one iteration, so a nontrivial kernel never reports infinity.
    iterations = std::max<uint64_t>(iterations, 1);
    const auto& kern = simd::kernels();
    const size_t col_stride = std::max<size_t>(1, words_for(r));
    std::mt19937_64 rng(seed);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});

    DistanceResult result;
    result.exact = false;
    result.seed = seed;
    result.iterations_used = iterations;

    std::vector<size_t> free_cols;
    std::vector<Word> columns;
    for (uint64_t it = 0; it < iterations; it++) {
        for (size_t i = n - 1; i > 0; i--) {
            std::swap(perm[i], perm[draw_below(rng, i + 1)]);
        }
        RowEchelon e = row_reduce(base, perm);

        std::vector<bool> is_pivot(n, false);
        for (size_t p : e.pivots) {
            is_pivot[p] = true;
        }
        free_cols.clear();
        for (size_t c = 0; c < n; c++) {
            if (!is_pivot[c]) {
                free_cols.push_back(c);
            }
        }

        // Column f of the reduced matrix, restricted to the pivot rows, is the
        // redundancy part of the codeword with a single information bit at f.
        const size_t kdim = free_cols.size();
        columns.assign(kdim * col_stride, 0);
        for (size_t i = 0; i < r; i++) {
            for (size_t j = 0; j < kdim; j++) {
                if (e.reduced.get(i, free_cols[j])) {
                    columns[j * col_stride + i / kWordBits] |= Word{1} << (i % kWordBits);
                }
            }
        }
        auto column = [&](size_t j) { return std::span<const Word>(columns.data() + j * col_stride, col_stride); };

        auto record = [&](size_t weight, size_t a, std::optional<size_t> b) {
            result.value = weight;
            BitVector witness(n);
            witness.set(free_cols[a]);
            if (b) {
                witness.set(free_cols[*b]);
            }
            for (size_t i = 0; i < r; i++) {
                bool bit = e.reduced.get(i, free_cols[a]);
                if (b) {
                    bit ^= e.reduced.get(i, free_cols[*b]);
                }
                if (bit) {
                    witness.set(e.pivots[i]);
                }
            }
            result.witness = std::move(witness);
        };

        for (size_t a = 0; a < kdim; a++) {
            size_t w = 1 + kern.popcount(column(a));
            if (w < result.value) {
                record(w, a, std::nullopt);
            }
        }
        for (size_t a = 0; a < kdim; a++) {
            for (size_t b = a + 1; b < kdim; b++) {
                size_t w = 2 + kern.xor_popcount(column(a), column(b));
                if (w < result.value) {
                    record(w, a, b);
                }
            }
        }
    }
    return result;
}

}  // namespace locohgp::gf2
