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

#include "locohgp/metrics/tanner.hpp"

#include <sstream>

namespace locohgp::metrics {

std::string tanner_export(const hgp::CssCode& c) {
    std::ostringstream out;
    out << "# locohgp tanner 1\n";
    out << "counts " << c.n << ' ' << c.hx.rows() << ' ' << c.hz.rows() << ' '
        << (c.hx.nonzeros() + c.hz.nonzeros()) << '\n';
    for (size_t i = 0; i < c.n; i++) {
        out << "node q " << i << '\n';
    }
    for (size_t r = 0; r < c.hx.rows(); r++) {
        out << "node x " << r << '\n';
    }
    for (size_t r = 0; r < c.hz.rows(); r++) {
        out << "node z " << r << '\n';
    }
    for (size_t r = 0; r < c.hx.rows(); r++) {
        for (uint32_t q : c.hx.row(r)) {
            out << "edge x " << r << " q " << q << '\n';
        }
    }
    for (size_t r = 0; r < c.hz.rows(); r++) {
        for (uint32_t q : c.hz.row(r)) {
            out << "edge z " << r << " q " << q << '\n';
        }
    }
    return out.str();
}

}  // namespace locohgp::metrics
