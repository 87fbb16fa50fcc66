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

#include "locohgp/explorer/discrepancy.hpp"

#include <string>

#include "locohgp/errors.hpp"

namespace locohgp::explorer {

std::string_view to_string(Discrepancy d) {
    switch (d) {
        case Discrepancy::Consistent:
            return "Consistent";
        case Discrepancy::KMatching:
            return "KMatching";
        case Discrepancy::Other:
            return "Other";
    }
    return "?";
}

DiscrepancyReport discrepancy_report(const lattice::ClassicalCodeSummary& classical, size_t published_n,
                                     size_t published_rep) {
    if (published_rep < 2) {
        throw LengthTooSmall("repetition length must be at least 2");
    }
    size_t base = classical.n * published_rep;
    if (published_n < base || (published_n - base) % (published_rep - 1) != 0) {
        throw NonIntegerImpliedRows("n = " + std::to_string(published_n) + " with L = " +
                                    std::to_string(published_rep) + " and n1 = " + std::to_string(classical.n) +
                                    " implies a non-integer check count");
    }
    DiscrepancyReport r;
    r.published_n = published_n;
    r.published_rep = published_rep;
    r.implied_rows = (published_n - base) / (published_rep - 1);
    r.rank = classical.rank;
    r.k1 = classical.k;
    r.computed_n = base + classical.rank * (published_rep - 1);
    if (r.implied_rows == r.rank) {
        r.kind = Discrepancy::Consistent;
    } else if (r.implied_rows == r.k1) {
        r.kind = Discrepancy::KMatching;
    }
    return r;
}

}  // namespace locohgp::explorer
