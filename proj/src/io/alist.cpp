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

#include "locohgp/io/alist.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "locohgp/errors.hpp"

namespace locohgp::io {
namespace {

void write_list(std::ostringstream& out, const std::vector<size_t>& entries, size_t width) {
    for (size_t i = 0; i < width; i++) {
        if (i) {
            out << ' ';
        }
        out << (i < entries.size() ? entries[i] + 1 : 0);
    }
    out << '\n';
}

}  // namespace

std::string export_alist(const gf2::BitMatrix& m) {
    std::vector<std::vector<size_t>> cols(m.cols());
    std::vector<std::vector<size_t>> rows(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        rows[r] = m.row_support(r);
        for (size_t c : rows[r]) {
            cols[c].push_back(r);
        }
    }
    size_t max_col = 0;
    size_t max_row = 0;
    for (const auto& c : cols) {
        max_col = std::max(max_col, c.size());
    }
    for (const auto& r : rows) {
        max_row = std::max(max_row, r.size());
    }

    std::ostringstream out;
    out << m.cols() << ' ' << m.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (size_t c = 0; c < cols.size(); c++) {
        out << (c ? " " : "") << cols[c].size();
    }
    out << '\n';
    for (size_t r = 0; r < rows.size(); r++) {
        out << (r ? " " : "") << rows[r].size();
    }
    out << '\n';
    for (const auto& c : cols) {
        write_list(out, c, max_col);
    }
    for (const auto& r : rows) {
        write_list(out, r, max_row);
    }
    return out.str();
}

gf2::BitMatrix import_alist(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto next = [&](const char* what) {
        long long v;
        if (!(in >> v) || v < 0) {
            throw MalformedAlist(std::string("expected ") + what);
        }
        return static_cast<size_t>(v);
    };
    size_t n = next("column count");
    size_t m = next("row count");
    size_t max_col = next("max column degree");
    size_t max_row = next("max row degree");
    std::vector<size_t> col_deg(n), row_deg(m);
    for (auto& d : col_deg) {
        d = next("column degree");
        if (d > max_col) {
            throw MalformedAlist("column degree exceeds declared maximum");
        }
    }
    for (auto& d : row_deg) {
        d = next("row degree");
        if (d > max_row) {
            throw MalformedAlist("row degree exceeds declared maximum");
        }
    }

    gf2::BitMatrix from_cols(m, n);
    for (size_t c = 0; c < n; c++) {
        for (size_t i = 0; i < max_col; i++) {
            size_t v = next("column entry");
            if (i < col_deg[c]) {
                if (v < 1 || v > m) {
                    throw MalformedAlist("column entry out of range");
                }
                from_cols.set(v - 1, c, true);
            } else if (v != 0) {
                throw MalformedAlist("column padding must be zero");
            }
        }
    }
    gf2::BitMatrix from_rows(m, n);
    for (size_t r = 0; r < m; r++) {
        for (size_t i = 0; i < max_row; i++) {
            size_t v = next("row entry");
            if (i < row_deg[r]) {
                if (v < 1 || v > n) {
                    throw MalformedAlist("row entry out of range");
                }
                from_rows.set(r, v - 1, true);
            } else if (v != 0) {
                throw MalformedAlist("row padding must be zero");
            }
        }
    }
    if (!(from_rows == from_cols)) {
        throw MalformedAlist("row and column lists disagree");
    }
    for (size_t r = 0; r < m; r++) {
        if (from_rows.row_weight(r) != row_deg[r]) {
            throw MalformedAlist("row list repeats an entry");
        }
    }
    return from_rows;
}

}  // namespace locohgp::io
