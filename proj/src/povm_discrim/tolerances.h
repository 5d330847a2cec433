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

#ifndef POVM_DISCRIM_TOLERANCES_H
#define POVM_DISCRIM_TOLERANCES_H

namespace povm_discrim {

/// Every numeric threshold used by the library lives here.
namespace tol {

/// Entrywise Hermiticity / completeness / norm checks.
inline constexpr double kAlgebraic = 1e-12;
/// Eigendecomposition reconstruction, trace and positivity of density matrices.
inline constexpr double kReconstruction = 1e-10;
/// Completeness of Kraus measurements (max |sum F^dag F - I|).
inline constexpr double kCompleteness = 1e-10;
/// Outer (probe) optimization agreement.
inline constexpr double kOptimization = 1e-6;
/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
inline constexpr double kJacobiOffDiagonal = 1e-13;
/// Outcome probabilities at or below this are treated as "never occurs".
inline constexpr double kZeroProbability = 1e-12;
/// A discrimination value within this of the sum of weights counts as perfect.
inline constexpr double kPerfect = 1e-8;
/// Largest primal-dual gap accepted as a certified discrimination value.
inline constexpr double kCertificateGap = 1e-6;
/// Primal value must not exceed the dual bound by more than this.
inline constexpr double kCertificateSoundness = 1e-9;

}  // namespace tol
}  // namespace povm_discrim

#endif
