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

#ifndef POVM_DISCRIM_POVM_SDP_H
#define POVM_DISCRIM_POVM_SDP_H

#include <span>
#include <vector>

#include "povm_discrim/linalg.h"

namespace povm_discrim {

/// Solution of  max_{M} sum_k Re Tr(C_k M_k)  s.t.  sum_k M_k = I, M_k >= 0,
/// together with its dual  min Tr Y  s.t.  Y >= C_k.
struct PovmSdpResult {
    /// Objective at `povm`, which is exactly feasible up to rounding.
    double primal_value = 0;
    /// Tr Y + d * shift for the best dual candidate found; always a valid upper bound.
    double dual_bound = 0;
    std::vector<Matrix> povm;
    /// Feasible dual operator (shift already applied).
    Matrix dual_operator;
    int iterations = 0;
};

/// Two outcomes are solved in closed form; more outcomes use a primal-dual
/// interior-point method (HKM direction, Mehrotra predictor-corrector) on the
/// joint support of the costs. Costs must be Hermitian with a common dimension.
PovmSdpResult solve_povm_sdp(std::span<const Matrix> costs);

/// Tr Y + d * max(0, max_k lambda_max(C_k - Y)): the value of the cheapest
/// feasible dual of the form Y + s I.
double shifted_dual_bound(const Matrix &y, std::span<const Matrix> costs, Matrix *feasible_y = nullptr);

}  // namespace povm_discrim

#endif
