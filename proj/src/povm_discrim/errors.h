// Copyright 2026 The povm_discrim Authors
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

#ifndef POVM_DISCRIM_ERRORS_H
#define POVM_DISCRIM_ERRORS_H

#include <stdexcept>

namespace povm_discrim {

/// Malformed input: wrong dimensions, non-Hermitian operators, incomplete measurements.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A constructor parameter lies outside the interval where the construction is valid.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace povm_discrim

#endif
