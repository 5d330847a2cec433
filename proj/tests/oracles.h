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

#ifndef POVM_DISCRIM_TESTS_ORACLES_H
#define POVM_DISCRIM_TESTS_ORACLES_H

// Reference formulas written against plain std::complex arrays, sharing no
// code with the library.

#include <array>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Qubit = std::array<C, 2>;
using Mat2 = std::array<std::array<C, 2>, 2>;

double overlap2(const Qubit &a, const Qubit &b);

/// max over pairs of (s + sqrt(s^2 - 4 p p' |<a|b>|^2)) / 2 and max_x p_x.
double dms_projective(const std::vector<Qubit> &kets, const std::vector<double> &priors);
/// 1 - min over pairs of (s - sqrt(...)) / 2, and 1 - min_x p_x.
double ams_projective(const std::vector<Qubit> &kets, const std::vector<double> &priors);

/// 1/2 + sqrt(1 - |<a|b>|^4) / 2.
double dbarms_projective_pair(const Qubit &a, const Qubit &b);
/// 1/2 + |sin(theta/2)| / 2.
double dme_projective_pair_maxent(double theta);

/// Sum of positive eigenvalues of a 2x2 Hermitian matrix.
double positive_part_trace(const Mat2 &a);

/// DME of two qubit measurements (Kraus lists) with equal priors at a
/// two-qubit probe psi[2*i + j], from Bob's conditional states and the
/// two-state Helstrom expression.
double dme_pair(const std::vector<Mat2> &f1, const std::vector<Mat2> &f2, const std::array<C, 4> &psi);

/// Perfect antidistinguishability of three pure qubit states from their
/// pairwise overlaps (both inequalities, boundary included to 1e-12).
bool caves_antidistinguishable(const Qubit &a, const Qubit &b, const Qubit &c);

}  // namespace oracle

#endif
