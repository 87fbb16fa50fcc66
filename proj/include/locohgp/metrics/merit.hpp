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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace locohgp::metrics {

/// Nonnegative rational num / den, den > 0. Compared exactly.
struct Ratio {
    uint64_t num = 0;
    uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Three decimal places, rounding half to even on exact ties
    /// (1/16 -> "0.062").
    std::string fixed3() const;

    std::strong_ordering operator<=>(const Ratio& other) const;
    bool operator==(const Ratio& other) const { return (*this <=> other) == 0; }
};

struct FiguresOfMerit {
    Ratio kd2n;
    Ratio kn;
    Ratio dn;
};

/// k d^2 / n, k / n and d / n. n must be positive; pass d = 0 when the
/// distance is infinite or unknown.
FiguresOfMerit figures_of_merit(size_t n, size_t k, size_t d);

enum class Metric { KD2N, KN, DN };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view s);
const Ratio& select(const FiguresOfMerit& f, Metric m);

}  // namespace locohgp::metrics
