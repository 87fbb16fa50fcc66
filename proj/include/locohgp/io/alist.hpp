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

#include <string>
#include <string_view>

#include "locohgp/gf2/bit_matrix.hpp"

namespace locohgp::io {

/// MacKay alist text:
///
///     n m
///     max_col_degree max_row_degree
///     column degrees
///     row degrees
///     n lines of 1-based row indices per column, zero padded
///     m lines of 1-based column indices per row, zero padded
std::string export_alist(const gf2::BitMatrix& m);

/// Inverse of export_alist. Column and row lists must agree; throws
/// MalformedAlist otherwise.
gf2::BitMatrix import_alist(std::string_view text);

}  // namespace locohgp::io
