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

#ifndef POVM_DISCRIM_LINALG_H
#define POVM_DISCRIM_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "povm_discrim/tolerances.h"

namespace povm_discrim {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions up to 4 are stored
/// inline; larger ones (up to the 16 of two ququarts) on the heap.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::vector<Complex> row_major);
    Matrix(const Matrix &other);
    Matrix(Matrix &&other) noexcept;
    Matrix &operator=(const Matrix &other);
    Matrix &operator=(Matrix &&other) noexcept;

    static Matrix identity(size_t dim);
    static Matrix diagonal(std::span<const double> entries);
    static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    size_t dim() const noexcept {
        return dim_;
    }
    Complex operator()(size_t row, size_t col) const {
        return buf()[row * dim_ + col];
    }
    Complex &operator()(size_t row, size_t col) {
        return buf()[row * dim_ + col];
    }
    std::span<const Complex> data() const noexcept {
        return {buf(), dim_ * dim_};
    }

    Matrix adjoint() const;
    /// (A + A^dag) / 2.
    Matrix hermitian_part() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tolerance = tol::kAlgebraic) const;
    bool has_nan() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex scalar);

    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator*(Matrix a, Complex s) {
        return a *= s;
    }
    friend Matrix operator*(Complex s, Matrix a) {
        return a *= s;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    bool operator==(const Matrix &other) const;

    std::string str() const;

   private:
    static constexpr size_t kInline = 4;
    Complex *buf() noexcept {
        return dim_ <= kInline ? small_.data() : large_.data();
    }
    const Complex *buf() const noexcept {
        return dim_ <= kInline ? small_.data() : large_.data();
    }
    std::span<Complex> mut_data() noexcept {
        return {buf(), dim_ * dim_};
    }

    size_t dim_ = 0;
    // Only the first dim*dim entries are meaningful when dim <= kInline.
    std::array<Complex, kInline * kInline> small_;
    std::vector<Complex> large_;
};

/// Unit vector. Construction checks the norm; use `Ket::normalized` to rescale.
class Ket {
   public:
    Ket() = default;
    explicit Ket(std::vector<Complex> amplitudes);

    static Ket normalized(std::vector<Complex> amplitudes);
    static Ket basis(size_t dim, size_t index);

    size_t dim() const noexcept {
        return amps_.size();
    }
    Complex operator[](size_t k) const {
        return amps_[k];
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }

    /// |psi><psi|.
    Matrix projector() const;
    /// Same ray with the first non-negligible amplitude made real and non-negative.
    Ket with_canonical_phase() const;
    /// Vector orthogonal to this qubit ket: for a|0>+b|1>, returns -b*|0>+a*|1>.
    Ket qubit_perp() const;

    bool operator==(const Ket &other) const = default;

   private:
    std::vector<Complex> amps_;
};

/// <a|b>.
Complex inner(const Ket &a, const Ket &b);
/// |a><b|.
Matrix outer(const Ket &a, const Ket &b);
Matrix outer(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> mat_vec(const Matrix &m, std::span<const Complex> v);
/// Re Tr(A B).
double trace_product(const Matrix &a, const Matrix &b);
/// Re <psi| A |psi>.
double expectation(const Matrix &a, const Ket &psi);

/// Kronecker product; (A (x) B)[i*dB+k, j*dB+l] = A[i,j] B[k,l].
Matrix tensor(const Matrix &a, const Matrix &b);
Ket tensor(const Ket &a, const Ket &b);

/// Tr_A of an operator on A (x) B. Throws ValidationError on dimension mismatch.
Matrix partial_trace_a(const Matrix &rho_ab, size_t dim_a, size_t dim_b);
/// Tr_B of an operator on A (x) B.
Matrix partial_trace_b(const Matrix &rho_ab, size_t dim_a, size_t dim_b);

struct HermitianEigen {
    /// Ascending.
    std::vector<double> values;
    /// Orthonormal; vectors[i] belongs to values[i]. Order within a degenerate
    /// cluster follows the deterministic sweep order and carries no meaning.
    std::vector<Ket> vectors;

    Matrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix. Dimension 2 uses the closed-form
/// quadratic; larger dimensions use cyclic complex Jacobi rotations.
/// Throws ValidationError when max|H - H^dag| exceeds tol::kAlgebraic.
HermitianEigen herm_eigs(const Matrix &h);

double max_eigenvalue(const Matrix &h);
double min_eigenvalue(const Matrix &h);
/// Sum of max(lambda, 0) over the eigenvalues.
double positive_eigenvalue_sum(const Matrix &h);
/// Spectral projection onto the strictly positive eigenvalues times those eigenvalues.
Matrix positive_part(const Matrix &h);
/// f applied to the spectrum.
template <typename F>
Matrix spectral_map(const HermitianEigen &eig, F &&f) {
    size_t d = eig.values.size();
    Matrix out(d);
    for (size_t k = 0; k < d; k++) {
        double fk = f(eig.values[k]);
        auto v = eig.vectors[k].amplitudes();
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                out(i, j) += fk * v[i] * std::conj(v[j]);
            }
        }
    }
    return out;
}

/// Lower-triangular L with A = L L^dag, or nullopt when A is not positive definite.
std::optional<Matrix> cholesky(const Matrix &a);
/// Inverse of a general square matrix by Gauss-Jordan with partial pivoting.
/// Throws ValidationError for singular input.
Matrix inverse(const Matrix &a);

/// Hermitian, unit trace, eigenvalues >= -tol::kReconstruction.
bool is_density_matrix(const Matrix &rho);
/// Throws ValidationError when `rho` is not a density matrix.
void require_density_matrix(const Matrix &rho, const char *what);

}  // namespace povm_discrim

#endif
