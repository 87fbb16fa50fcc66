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

#include <stdexcept>
#include <string>

namespace locohgp {

/// Bad input: a malformed patch string, a grid too small for its patch, a
/// budget that cannot be met. The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant (a construction bug, not a user error). The
/// CLI maps these to exit code 2.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

#define LOCOHGP_VALIDATION_ERROR(Name)                \
    class Name : public ValidationError {             \
       public:                                        \
        using ValidationError::ValidationError;       \
    }

#define LOCOHGP_INVARIANT_ERROR(Name)                 \
    class Name : public InvariantError {              \
       public:                                        \
        using InvariantError::InvariantError;         \
    }

LOCOHGP_VALIDATION_ERROR(BudgetExceeded);
LOCOHGP_VALIDATION_ERROR(MalformedPatch);
LOCOHGP_VALIDATION_ERROR(GridTooSmall);
LOCOHGP_VALIDATION_ERROR(LengthTooSmall);
LOCOHGP_VALIDATION_ERROR(SizeTooSmall);
LOCOHGP_VALIDATION_ERROR(InfiniteDistance);
LOCOHGP_VALIDATION_ERROR(NoGeometry);
LOCOHGP_VALIDATION_ERROR(NonIntegerImpliedRows);
LOCOHGP_VALIDATION_ERROR(MalformedAlist);

LOCOHGP_INVARIANT_ERROR(OrthogonalityViolation);
LOCOHGP_INVARIANT_ERROR(FormulaRankMismatch);

#undef LOCOHGP_VALIDATION_ERROR
#undef LOCOHGP_INVARIANT_ERROR

}  // namespace locohgp
