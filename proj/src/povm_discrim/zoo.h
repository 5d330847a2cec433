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

#ifndef POVM_DISCRIM_ZOO_H
#define POVM_DISCRIM_ZOO_H

#include <vector>

#include "povm_discrim/measurements.h"

namespace povm_discrim {

namespace kets {

/// 1/2 |0> + sqrt(3)/2 |1>.
Ket v_plus();
/// 1/2 |0> - sqrt(3)/2 |1>.
Ket v_minus();
/// sqrt(3)/2 |0> - 1/2 |1>.
Ket v_plus_perp();
/// sqrt(3)/2 |0> + 1/2 |1>.
Ket v_minus_perp();
/// cos(theta/2) |0> + sin(theta/2) |1>.
Ket phi(double theta);
/// (|00> + |11>) / sqrt(2).
Ket phi_plus();

}  // namespace kets

/// Qubit unitary sending `from` to `to` and from-perp to to-perp.
Matrix unitary_mapping(const Ket &from, const Ket &to);

/// Throws ValidationError unless U^dag U = I within tol::kAlgebraic.
void require_unitary(const Matrix &u, const char *what);

KrausMeasurement trine();
KrausMeasurement reverse_trine();
/// Trine with U_i applied on the left of outcome i.
KrausMeasurement left_asym_trine(const Matrix &u1, const Matrix &u2, const Matrix &u3);
/// theta in (-pi/3, pi/3) excluding 0; otherwise DomainError.
KrausMeasurement right_asym_trine(double theta);
KrausMeasurement left_right_asym_trine(double theta, const Matrix &u2, const Matrix &u3);
/// mu in (4 pi/3, 2 pi); otherwise DomainError.
KrausMeasurement lra_reverse_trine(double mu, const Matrix &v1, const Matrix &v3);

/// Right-asym trine outcomes reordered as (2, 3, 1).
KrausMeasurement relabel_m(double theta);
/// Left-right-asym trine outcomes reordered as (3, 1, 2).
KrausMeasurement relabel_n(double theta, const Matrix &u2, const Matrix &u3);
/// Right-asym trine outcomes reordered as (3, 2, 1).
KrausMeasurement relabel_r(double theta);
/// LRA reverse trine outcomes reordered as (3, 2, 1).
KrausMeasurement relabel_s(double mu, const Matrix &v1, const Matrix &v3);

/// {|psi><psi|, |psi_perp><psi_perp|} with psi = cos(theta/2)|0> + e^{i phase} sin(theta/2)|1>.
KrausMeasurement projective_qubit(double theta, double phase = 0);
/// Projective measurement {|psi><psi|, |psi_perp><psi_perp|} for a given qubit ket.
KrausMeasurement projective_qubit(const Ket &psi);
/// Two qutrit projective measurements that are perfectly distinguishable with probe |0>.
std::vector<KrausMeasurement> projective_qutrit_pair();

struct RightAsymCoefficients {
    double alpha, beta, gamma;
};
RightAsymCoefficients right_asym_coefficients(double theta);

struct ReverseCoefficients {
    double a, b, c;
};
ReverseCoefficients lra_reverse_coefficients(double mu);

}  // namespace povm_discrim

#endif
