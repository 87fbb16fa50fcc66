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
#include <limits>
#include <optional>
#include <string>

#include "locohgp/gf2/bit_matrix.hpp"

namespace locohgp::gf2 {

/// Exact enumeration is attempted up to this kernel dimension by default
/// (2^26 Gray-code steps).
constexpr size_t kDefaultKBudget = 26;

/// Minimum weight of a nonzero vector in the kernel of a check matrix.
struct DistanceResult {
    static constexpr size_t kInfinity = std::numeric_limits<size_t>::max();

    /// kInfinity iff the kernel is trivial.
    size_t value = kInfinity;
    /// True when `value` is certified minimal; heuristic results are upper bounds.
    bool exact = true;
    uint64_t iterations_used = 0;
    /// Set for heuristic runs only.
    std::optional<uint64_t> seed;
    /// A kernel vector of weight `value`, when one exists.
    std::optional<BitVector> witness;

    bool is_infinite() const { return value == kInfinity; }
    /// "27", "<=68" for inexact values, "inf" for the trivial kernel.
    std::string to_string() const;

    static DistanceResult infinite() { return DistanceResult{}; }
};

/// Minimum of two distances where kInfinity acts as +infinity; the result is
/// exact only if every finite contributor is exact.
DistanceResult min_distance(const DistanceResult& a, const DistanceResult& b);

/// Exhaustive search over all 2^k - 1 nonzero kernel vectors using a Gray-code
/// walk over nullspace_basis(m). Throws BudgetExceeded if k > k_budget.
DistanceResult min_weight_exact(const BitMatrix& m, size_t k_budget = kDefaultKBudget);

/// Randomized information-set search (Lee-Brickell, p <= 2). Each iteration
/// draws a column permutation from a seeded mt19937_64, row-reduces with
/// pivots taken in permuted order, and scores every codeword supported on at
/// most two information positions. The result is an upper bound and is
/// bit-for-bit reproducible for a given (m, iterations, seed).
DistanceResult min_weight_isd(const BitMatrix& m, uint64_t iterations, uint64_t seed);

}  // namespace locohgp::gf2
