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

#ifndef POVM_DISCRIM_RANDOM_H
#define POVM_DISCRIM_RANDOM_H

#include <random>

#include "povm_discrim/linalg.h"

namespace povm_discrim {

/// Haar-random unit vector.
Ket haar_ket(size_t dim, std::mt19937_64 &rng);
/// Haar-random unitary (Gram-Schmidt on complex Gaussian columns).
Matrix haar_unitary(size_t dim, std::mt19937_64 &rng);
/// Random Hermitian matrix with iid Gaussian entries.
Matrix random_hermitian(size_t dim, std::mt19937_64 &rng);
/// Random full-rank density matrix (Ginibre ensemble).
Matrix random_density(size_t dim, std::mt19937_64 &rng);

}  // namespace povm_discrim

#endif
