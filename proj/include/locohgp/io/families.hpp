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

#include <array>
#include <cstddef>
#include <string>

namespace locohgp::io {

/// a + b * l.
struct Affine {
    size_t a = 0;
    size_t b = 0;
    size_t at(size_t l) const { return a + b * l; }
    /// "20+4l"
    std::string to_string() const;
};

/// A tailored 2D seed family [n1(l), k1(l), dz] with r1(l) independent
/// checks, paired with a repetition code of length L.
struct FamilyRow {
    int row_id = 0;
    Affine n1;
    Affine k1;
    size_t dz = 0;
    Affine r1;
    /// The k column as published. Differs from k1 only in row 4.
    Affine published_k;
};

struct FamilyParams {
    size_t n = 0;
    /// From the published k column.
    size_t k = 0;
    /// k1(l) of the seed; the product's dimension. Equal to k except in row 4.
    size_t seed_k = 0;
    size_t dx = 0;
    size_t dz = 0;
};

const std::array<FamilyRow, 5>& family_rows();

/// Throws ValidationError for row ids outside 1..5.
const FamilyRow& family_row(int row_id);

/// Evaluates the published formulas: n = L n1 + (L - 1) r1, k from the k
/// column, dx = L, dz = row constant. Throws LengthTooSmall for L < 2.
FamilyParams family_params(const FamilyRow& row, size_t l, size_t rep_length);

/// Symbolic entry for the Fibonacci seed family; not evaluated numerically.
struct SymbolicFamily {
    std::string seed;
    std::string n;
    std::string k;
    std::string dx;
    std::string dz;
    size_t check_weight = 0;
    size_t qubit_weight = 0;
};
const SymbolicFamily& fibonacci_family();

}  // namespace locohgp::io
