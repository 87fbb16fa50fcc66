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

#include "locohgp/hgp/oracle.hpp"

#include <bit>

#include "locohgp/errors.hpp"
#include "locohgp/gf2/linalg.hpp"

namespace locohgp::hgp {
namespace {

// Minimum weight over ker(checks) minus rowspace(stabilizers).
gf2::DistanceResult logical_min_weight(const gf2::BitMatrix& checks, const gf2::BitMatrix& stabilizers,
                                       size_t dim_budget) {
    const size_t n = checks.cols();
    std::vector<gf2::BitVector> kernel = gf2::nullspace_basis(checks);
    if (kernel.size() > dim_budget || kernel.size() >= 63) {
        throw BudgetExceeded("kernel dimension " + std::to_string(kernel.size()) + " exceeds oracle budget " +
                             std::to_string(dim_budget));
    }

    gf2::EchelonBasis span(n);
    std::vector<gf2::BitVector> ordered;
    for (size_t r = 0; r < stabilizers.rows(); r++) {
        gf2::BitVector v = stabilizers.row_vector(r);
        if (span.insert(v)) {
            ordered.push_back(std::move(v));
        }
    }
    const size_t trivial_dim = ordered.size();
    for (auto& v : kernel) {
        if (span.insert(v)) {
            ordered.push_back(std::move(v));
        }
    }
    if (ordered.size() != kernel.size()) {
        throw OrthogonalityViolation("stabilizer rows are not contained in the kernel of the other check type");
    }
    const size_t dim = ordered.size();
    if (dim == trivial_dim) {
        return gf2::DistanceResult::infinite();
    }

    const auto& kern = simd::kernels();
    const size_t stride = gf2::words_for(n);
    std::vector<gf2::Word> flat(dim * stride);
    for (size_t j = 0; j < dim; j++) {
        std::copy(ordered[j].words().begin(), ordered[j].words().end(),
                  flat.begin() + static_cast<ptrdiff_t>(j * stride));
    }
    std::vector<gf2::Word> current(stride, 0);
    size_t best = gf2::DistanceResult::kInfinity;
    uint64_t best_gray = 0;
    const uint64_t total = (uint64_t{1} << dim) - 1;
    for (uint64_t step = 1; step <= total; step++) {
        size_t j = static_cast<size_t>(std::countr_zero(step));
        size_t w = kern.xor_into_popcount(current, std::span<const gf2::Word>(flat.data() + j * stride, stride));
        uint64_t gray = step ^ (step >> 1);
        if ((gray >> trivial_dim) != 0 && w < best) {
            best = w;
            best_gray = gray;
        }
    }

    gf2::DistanceResult result;
    result.value = best;
    result.exact = true;
    result.iterations_used = total;
    gf2::BitVector witness(n);
    for (size_t j = 0; j < dim; j++) {
        if ((best_gray >> j) & 1) {
            witness ^= ordered[j];
        }
    }
    result.witness = std::move(witness);
    return result;
}

}  // namespace

std::pair<size_t, size_t> kernel_dimensions(const CssCode& c) {
    return {c.n - gf2::rank(c.hx.to_dense()), c.n - gf2::rank(c.hz.to_dense())};
}

OracleDistances distance_oracle_small(const CssCode& c, size_t dim_budget) {
    gf2::BitMatrix hx = c.hx.to_dense();
    gf2::BitMatrix hz = c.hz.to_dense();
    OracleDistances out;
    out.dz = logical_min_weight(hx, hz, dim_budget);
    out.dx = logical_min_weight(hz, hx, dim_budget);
    return out;
}

}  // namespace locohgp::hgp
