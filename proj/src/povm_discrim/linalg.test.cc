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

#include "povm_discrim/linalg.h"

#include <cmath>

#include "gtest/gtest.h"
#include "povm_discrim/errors.h"
#include "povm_discrim/random.h"

using namespace povm_discrim;

namespace {

Ket plus() {
    return Ket::normalized({1, 1});
}

Ket phi_plus() {
    return Ket::normalized({1, 0, 0, 1});
}

double max_diff(const Matrix &a, const Matrix &b) {
    return (a - b).max_abs();
}

}  // namespace

TEST(linalg, herm_eigs_pauli_z) {
    auto e = herm_eigs(Matrix::from_rows({{1, 0}, {0, -1}}));
    ASSERT_EQ(e.values.size(), 2u);
    EXPECT_DOUBLE_EQ(e.values[0], -1);
    EXPECT_DOUBLE_EQ(e.values[1], 1);
}

TEST(linalg, herm_eigs_identity_3) {
    auto e = herm_eigs(Matrix::identity(3));
    for (double x : e.values) {
        EXPECT_NEAR(x, 1, 1e-15);
    }
}

TEST(linalg, herm_eigs_projector_difference) {
    // Characteristic polynomial of diag-free 2x2: lambda^2 = 1/4 - 1/4 * |<0|+>|^2 = 1/8.
    Matrix h = Ket::basis(2, 0).projector() * 0.5 - plus().projector() * 0.5;
    auto e = herm_eigs(h);
    EXPECT_NEAR(e.values[0], -std::sqrt(0.125), 1e-12);
    EXPECT_NEAR(e.values[1], std::sqrt(0.125), 1e-12);
    EXPECT_NEAR(std::sqrt(0.125), 0.353553, 1e-6);
}

TEST(linalg, herm_eigs_rejects_non_hermitian) {
    EXPECT_THROW(herm_eigs(Matrix::from_rows({{1, 1}, {0, 1}})), ValidationError);
    EXPECT_THROW(herm_eigs(Matrix::from_rows({{1, 0, 0}, {0, 1, Complex(0, 1)}, {0, Complex(0, 1), 1}})),
                 ValidationError);
}

TEST(linalg, herm_eigs_random_reconstruction) {
    std::mt19937_64 rng(7);
    for (size_t d = 1; d <= 6; d++) {
        for (int trial = 0; trial < 200; trial++) {
            Matrix h = random_hermitian(d, rng);
            auto e = herm_eigs(h);
            ASSERT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
            EXPECT_LE((e.reconstruct() - h).frobenius_norm(), 1e-10);
            double sum = 0;
            for (double x : e.values) {
                sum += x;
            }
            EXPECT_NEAR(sum, h.trace().real(), 1e-10);
            for (size_t i = 0; i < d; i++) {
                for (size_t j = 0; j < d; j++) {
                    EXPECT_NEAR(std::abs(inner(e.vectors[i], e.vectors[j])), i == j ? 1.0 : 0.0, 1e-10);
                }
            }
        }
    }
}

TEST(linalg, herm_eigs_degenerate_and_diagonal) {
    std::mt19937_64 rng(11);
    for (size_t d = 2; d <= 4; d++) {
        Matrix u = haar_unitary(d, rng);
        std::vector<double> spectrum(d, 0.5);
        spectrum[0] = -1;
        Matrix h = (u * Matrix::diagonal(spectrum) * u.adjoint()).hermitian_part();
        auto e = herm_eigs(h);
        EXPECT_NEAR(e.values[0], -1, 1e-10);
        for (size_t k = 1; k < d; k++) {
            EXPECT_NEAR(e.values[k], 0.5, 1e-10);
        }
        EXPECT_LE((e.reconstruct() - h).frobenius_norm(), 1e-10);
    }
}

TEST(linalg, herm_eigs_unitary_invariance) {
    std::mt19937_64 rng(3);
    for (size_t d = 2; d <= 4; d++) {
        for (int trial = 0; trial < 50; trial++) {
            Matrix h = random_hermitian(d, rng);
            Matrix u = haar_unitary(d, rng);
            auto a = herm_eigs(h).values;
            auto b = herm_eigs((u * h * u.adjoint()).hermitian_part()).values;
            for (size_t k = 0; k < d; k++) {
                EXPECT_NEAR(a[k], b[k], 1e-10);
            }
        }
    }
}

TEST(linalg, tensor_examples) {
    EXPECT_EQ(tensor(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));
    std::vector<double> diag{1, 1, 0, 0};
    EXPECT_EQ(tensor(Ket::basis(2, 0).projector(), Matrix::identity(2)), Matrix::diagonal(diag));

    Matrix x = Matrix::from_rows({{0, 1}, {1, 0}});
    auto out = mat_vec(tensor(x, x), phi_plus().amplitudes());
    for (size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(std::abs(out[k] - phi_plus()[k]), 0, 1e-15);
    }
}

TEST(linalg, tensor_index_convention) {
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows({{0, 5}, {6, 7}});
    Matrix ab = tensor(a, b);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    EXPECT_EQ(ab(i * 2 + k, j * 2 + l), a(i, j) * b(k, l));
                }
            }
        }
    }
}

TEST(linalg, partial_trace_examples) {
    EXPECT_LE(max_diff(partial_trace_a(phi_plus().projector(), 2, 2), Matrix::identity(2) * 0.5), 1e-15);

    std::mt19937_64 rng(5);
    Matrix ra = random_density(2, rng);
    Matrix rb = random_density(3, rng);
    EXPECT_LE(max_diff(partial_trace_a(tensor(ra, rb), 2, 3), rb), 1e-12);
    EXPECT_LE(max_diff(partial_trace_b(tensor(ra, rb), 2, 3), ra), 1e-12);

    EXPECT_THROW(partial_trace_a(Matrix::identity(4), 2, 3), ValidationError);
}

TEST(linalg, partial_trace_schmidt_form) {
    Ket eta = Ket::normalized({0.17, 0.9854});
    Ket eta_perp = eta.qubit_perp();
    std::vector<Complex> z(4);
    for (size_t i = 0; i < 2; i++) {
        z[i * 2 + 0] += std::sqrt(0.88) * eta[i];
        z[i * 2 + 1] += std::sqrt(0.12) * eta_perp[i];
    }
    Matrix rho_b = partial_trace_a(Ket(z).projector(), 2, 2);
    std::vector<double> expected{0.88, 0.12};
    EXPECT_LE(max_diff(rho_b, Matrix::diagonal(expected)), 1e-12);
}

TEST(linalg, partial_trace_of_product_operators) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; trial++) {
        Matrix a = random_hermitian(2, rng);
        Matrix b = random_hermitian(2, rng);
        Matrix expected = b * a.trace();
        EXPECT_LE(max_diff(partial_trace_a(tensor(a, b), 2, 2), expected), 1e-12);
    }
}

TEST(linalg, cholesky_and_inverse) {
    std::mt19937_64 rng(13);
    for (size_t d = 1; d <= 5; d++) {
        Matrix rho = random_density(d, rng);
        auto l = cholesky(rho);
        ASSERT_TRUE(l.has_value());
        EXPECT_LE(max_diff(*l * l->adjoint(), rho), 1e-12);
        EXPECT_LE(max_diff(inverse(rho) * rho, Matrix::identity(d)), 1e-9);
    }
    EXPECT_FALSE(cholesky(Matrix::diagonal(std::vector<double>{1, -1})).has_value());
    EXPECT_THROW(inverse(Matrix(2)), ValidationError);
}

TEST(linalg, ket_validation_and_phase) {
    EXPECT_THROW(Ket({1, 1}), ValidationError);
    EXPECT_THROW(Ket::normalized({0, 0}), ValidationError);
    Ket k = Ket::normalized({Complex(0, -1), 1}).with_canonical_phase();
    EXPECT_NEAR(k[0].imag(), 0, 1e-15);
    EXPECT_GT(k[0].real(), 0);
    EXPECT_NEAR(std::abs(inner(k, k.qubit_perp())), 0, 1e-15);
}

TEST(linalg, density_checks) {
    EXPECT_TRUE(is_density_matrix(plus().projector()));
    EXPECT_FALSE(is_density_matrix(Matrix::identity(2)));
    EXPECT_FALSE(is_density_matrix(Matrix::diagonal(std::vector<double>{1.5, -0.5})));
    EXPECT_THROW(require_density_matrix(Matrix::identity(2), "probe"), ValidationError);
}
