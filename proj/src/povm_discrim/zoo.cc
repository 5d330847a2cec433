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

#include "povm_discrim/zoo.h"

#include <cmath>
#include <sstream>

#include "povm_discrim/errors.h"

namespace povm_discrim {

namespace kets {

Ket v_plus() {
    return Ket({0.5, std::sqrt(3.0) / 2});
}

Ket v_minus() {
    return Ket({0.5, -std::sqrt(3.0) / 2});
}

Ket v_plus_perp() {
    return Ket({std::sqrt(3.0) / 2, -0.5});
}

Ket v_minus_perp() {
    return Ket({std::sqrt(3.0) / 2, 0.5});
}

Ket phi(double theta) {
    return Ket({std::cos(theta / 2), std::sin(theta / 2)});
}

Ket phi_plus() {
    double s = 1 / std::sqrt(2.0);
    return Ket({s, 0, 0, s});
}

}  // namespace kets

namespace {

const double kSqrt3 = std::sqrt(3.0);

Matrix scaled_outer(double weight, const Ket &ket, const Ket &bra) {
    return outer(ket, bra) * std::sqrt(weight);
}

std::string angle_name(const char *base, double angle) {
    std::ostringstream out;
    out.precision(6);
    out << base << "(" << angle << ")";
    return out.str();
}

KrausMeasurement reorder(const KrausMeasurement &m, std::string name, std::initializer_list<size_t> order) {
    std::vector<Matrix> kraus;
    for (size_t a : order) {
        kraus.push_back(m.kraus(a));
    }
    return KrausMeasurement(std::move(name), std::move(kraus));
}

}  // namespace

Matrix unitary_mapping(const Ket &from, const Ket &to) {
    if (from.dim() != 2 || to.dim() != 2) {
        throw ValidationError("unitary_mapping needs qubit kets");
    }
    return outer(to, from) + outer(to.qubit_perp(), from.qubit_perp());
}

void require_unitary(const Matrix &u, const char *what) {
    if (u.dim() != 2) {
        throw ValidationError(std::string(what) + " must be a 2x2 unitary");
    }
    if ((u.adjoint() * u - Matrix::identity(2)).max_abs() > tol::kAlgebraic) {
        throw ValidationError(std::string(what) + " is not unitary");
    }
}

RightAsymCoefficients right_asym_coefficients(double theta) {
    if (!(theta > -M_PI / 3 && theta < M_PI / 3) || theta == 0) {
        throw DomainError("right-asymmetric trine angle must lie in (-pi/3, pi/3) excluding 0; got " +
                          std::to_string(theta));
    }
    double c = std::cos(theta / 2);
    double alpha = 0.5 / (c * c - 0.25);
    double beta = 1 - alpha / 2 * (1 + 2 / kSqrt3 * std::sin(theta));
    double gamma = 1 - alpha / 2 * (1 - 2 / kSqrt3 * std::sin(theta));
    return {alpha, beta, gamma};
}

ReverseCoefficients lra_reverse_coefficients(double mu) {
    if (!(mu > 4 * M_PI / 3 && mu < 2 * M_PI)) {
        throw DomainError("reverse-trine angle must lie in (4pi/3, 2pi); got " + std::to_string(mu));
    }
    double c = std::cos(mu / 2);
    double s = std::sin(mu / 2);
    double b = 1 / (c * c - kSqrt3 * c * s);
    double a = b * (std::cos(mu) - std::sin(mu) / kSqrt3);
    double cc = -b * (4 / kSqrt3) * c * s;
    return {a, b, cc};
}

KrausMeasurement trine() {
    Ket zero = Ket::basis(2, 0);
    return KrausMeasurement("trine", {scaled_outer(2.0 / 3, zero, zero),
                                      scaled_outer(2.0 / 3, kets::v_plus(), kets::v_plus()),
                                      scaled_outer(2.0 / 3, kets::v_minus(), kets::v_minus())});
}

KrausMeasurement reverse_trine() {
    Ket one = Ket::basis(2, 1);
    return KrausMeasurement("reverse_trine", {scaled_outer(2.0 / 3, one, one),
                                              scaled_outer(2.0 / 3, kets::v_plus_perp(), kets::v_plus_perp()),
                                              scaled_outer(2.0 / 3, kets::v_minus_perp(), kets::v_minus_perp())});
}

KrausMeasurement left_asym_trine(const Matrix &u1, const Matrix &u2, const Matrix &u3) {
    require_unitary(u1, "U1");
    require_unitary(u2, "U2");
    require_unitary(u3, "U3");
    auto t = trine();
    return KrausMeasurement("left_asym_trine", {u1 * t.kraus(0), u2 * t.kraus(1), u3 * t.kraus(2)});
}

KrausMeasurement right_asym_trine(double theta) {
    auto k = right_asym_coefficients(theta);
    Ket zero = Ket::basis(2, 0);
    return KrausMeasurement(angle_name("right_asym_trine", theta),
                            {scaled_outer(k.alpha, zero, kets::phi(theta)),
                             scaled_outer(k.beta, kets::v_plus(), kets::v_plus()),
                             scaled_outer(k.gamma, kets::v_minus(), kets::v_minus())});
}

KrausMeasurement left_right_asym_trine(double theta, const Matrix &u2, const Matrix &u3) {
    require_unitary(u2, "U2");
    require_unitary(u3, "U3");
    auto j = right_asym_trine(theta);
    return KrausMeasurement(angle_name("left_right_asym_trine", theta),
                            {j.kraus(0), u2 * j.kraus(1), u3 * j.kraus(2)});
}

KrausMeasurement lra_reverse_trine(double mu, const Matrix &v1, const Matrix &v3) {
    require_unitary(v1, "V1");
    require_unitary(v3, "V3");
    auto k = lra_reverse_coefficients(mu);
    Ket one = Ket::basis(2, 1);
    return KrausMeasurement(angle_name("lra_reverse_trine", mu),
                            {v1 * scaled_outer(k.a, one, one),
                             scaled_outer(k.b, kets::v_plus_perp(), kets::phi(mu)),
                             v3 * scaled_outer(k.c, kets::v_minus_perp(), kets::v_minus_perp())});
}

KrausMeasurement relabel_m(double theta) {
    return reorder(right_asym_trine(theta), angle_name("relabel_m", theta), {1, 2, 0});
}

KrausMeasurement relabel_n(double theta, const Matrix &u2, const Matrix &u3) {
    return reorder(left_right_asym_trine(theta, u2, u3), angle_name("relabel_n", theta), {2, 0, 1});
}

KrausMeasurement relabel_r(double theta) {
    return reorder(right_asym_trine(theta), angle_name("relabel_r", theta), {2, 1, 0});
}

KrausMeasurement relabel_s(double mu, const Matrix &v1, const Matrix &v3) {
    return reorder(lra_reverse_trine(mu, v1, v3), angle_name("relabel_s", mu), {2, 1, 0});
}

KrausMeasurement projective_qubit(const Ket &psi) {
    if (psi.dim() != 2) {
        throw ValidationError("projective_qubit needs a qubit ket");
    }
    return KrausMeasurement("projective", {psi.projector(), psi.qubit_perp().projector()});
}

KrausMeasurement projective_qubit(double theta, double phase) {
    return projective_qubit(Ket({std::cos(theta / 2), std::polar(1.0, phase) * std::sin(theta / 2)}));
}

std::vector<KrausMeasurement> projective_qutrit_pair() {
    double s = 1 / std::sqrt(2.0);
    Ket e0 = Ket::basis(3, 0);
    Ket e1 = Ket::basis(3, 1);
    Ket e2 = Ket::basis(3, 2);
    Ket sum({0, s, s});
    Ket diff({0, s, -s});
    return {KrausMeasurement("qutrit_computational", {e0.projector(), e1.projector(), e2.projector()}),
            KrausMeasurement("qutrit_rotated", {sum.projector(), e0.projector(), diff.projector()})};
}

}  // namespace povm_discrim
