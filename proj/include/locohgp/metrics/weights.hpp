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

#include "locohgp/hgp/product.hpp"

namespace locohgp::metrics {

struct WeightProfile {
    /// Largest stabilizer generator (row) weight over hx and hz.
    size_t w = 0;
    /// Largest column weight within hx.
    size_t qx = 0;
    /// Largest column weight within hz.
    size_t qz = 0;
    /// Largest combined column weight: checks of either type on one qubit.
    size_t q = 0;

    bool operator==(const WeightProfile&) const = default;
};

WeightProfile weight_profile(const hgp::CssCode& c);

}  // namespace locohgp::metrics
