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

#include "locohgp/io/families.hpp"

#include "locohgp/errors.hpp"

namespace locohgp::io {

std::string Affine::to_string() const {
    return std::to_string(a) + "+" + std::to_string(b) + "l";
}

const std::array<FamilyRow, 5>& family_rows() {
    // Row 4 publishes k = 32+2l, but its seed has k1 = 34+2l and
    // r1 = n1 - k1 = 85+5l; the product has k = k1.
    static const std::array<FamilyRow, 5> rows{{
        {1, {20, 4}, {10, 2}, 5, {10, 2}, {10, 2}},
        {2, {55, 5}, {22, 2}, 9, {33, 3}, {22, 2}},
        {3, {78, 6}, {26, 2}, 12, {52, 4}, {26, 2}},
        {4, {119, 7}, {34, 2}, 16, {85, 5}, {32, 2}},
        {5, {136, 8}, {34, 2}, 22, {102, 6}, {34, 2}},
    }};
    return rows;
}

const FamilyRow& family_row(int row_id) {
    if (row_id < 1 || row_id > 5) {
        throw ValidationError("family row must be in 1..5");
    }
    return family_rows()[static_cast<size_t>(row_id - 1)];
}

FamilyParams family_params(const FamilyRow& row, size_t l, size_t rep_length) {
    if (rep_length < 2) {
        throw LengthTooSmall("repetition length must be at least 2");
    }
    FamilyParams p;
    p.n = rep_length * row.n1.at(l) + (rep_length - 1) * row.r1.at(l);
    p.k = row.published_k.at(l);
    p.seed_k = row.k1.at(l);
    p.dx = rep_length;
    p.dz = row.dz;
    return p;
}

const SymbolicFamily& fibonacci_family() {
    static const SymbolicFamily f{"[O(l^2),l,Omega(l)]", "O(l^2 L)", "O(l)", "L", "Omega(l)", 6, 6};
    return f;
}

}  // namespace locohgp::io
