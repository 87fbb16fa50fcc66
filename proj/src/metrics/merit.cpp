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

#include "locohgp/metrics/merit.hpp"

#include <cstdio>

#include "locohgp/errors.hpp"

namespace locohgp::metrics {

using u128 = unsigned __int128;

std::string Ratio::fixed3() const {
    u128 scaled = static_cast<u128>(num) * 1000;
    u128 q = scaled / den;
    u128 rem = scaled % den;
    u128 twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) {
        q += 1;
    }
    unsigned long long whole = static_cast<unsigned long long>(q / 1000);
    unsigned long long frac = static_cast<unsigned long long>(q % 1000);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%llu.%03llu", whole, frac);
    return buf;
}

std::strong_ordering Ratio::operator<=>(const Ratio& other) const {
    u128 lhs = static_cast<u128>(num) * other.den;
    u128 rhs = static_cast<u128>(other.num) * den;
    return lhs <=> rhs;
}

FiguresOfMerit figures_of_merit(size_t n, size_t k, size_t d) {
    if (n == 0) {
        throw ValidationError("figures of merit need n >= 1");
    }
    FiguresOfMerit f;
    f.kd2n = {static_cast<uint64_t>(k) * d * d, n};
    f.kn = {k, n};
    f.dn = {d, n};
    return f;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::KD2N:
            return "kd2n";
        case Metric::KN:
            return "kn";
        case Metric::DN:
            return "dn";
    }
    return "?";
}

Metric parse_metric(std::string_view s) {
    if (s == "kd2n") {
        return Metric::KD2N;
    }
    if (s == "kn") {
        return Metric::KN;
    }
    if (s == "dn") {
        return Metric::DN;
    }
    throw ValidationError("unknown metric '" + std::string(s) + "' (kd2n|kn|dn)");
}

const Ratio& select(const FiguresOfMerit& f, Metric m) {
    switch (m) {
        case Metric::KN:
            return f.kn;
        case Metric::DN:
            return f.dn;
        default:
            return f.kd2n;
    }
}

}  // namespace locohgp::metrics
