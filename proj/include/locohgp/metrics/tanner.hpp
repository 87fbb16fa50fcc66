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

#include "locohgp/hgp/product.hpp"

namespace locohgp::metrics {

/// Plain-text Tanner graph, one item per line:
///
///     # locohgp tanner 1
///     counts <qubits> <x checks> <z checks> <edges>
///     node q <i>          (qubits, ascending)
///     node x <r>          (X checks, ascending)
///     node z <r>          (Z checks, ascending)
///     edge x <r> q <i>    (X rows ascending, then qubits ascending)
///     edge z <r> q <i>
std::string tanner_export(const hgp::CssCode& c);

}  // namespace locohgp::metrics
