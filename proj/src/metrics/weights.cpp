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

#include "locohgp/metrics/weights.hpp"

#include <algorithm>

namespace locohgp::metrics {

WeightProfile weight_profile(const hgp::CssCode& c) {
    WeightProfile p;
    p.w = std::max(c.hx.max_row_weight(), c.hz.max_row_weight());
    auto x_cols = c.hx.column_weights();
    auto z_cols = c.hz.column_weights();
    for (size_t q = 0; q < c.n; q++) {
        p.qx = std::max(p.qx, x_cols[q]);
        p.qz = std::max(p.qz, z_cols[q]);
        p.q = std::max(p.q, x_cols[q] + z_cols[q]);
    }
    return p;
}

}  // namespace locohgp::metrics
