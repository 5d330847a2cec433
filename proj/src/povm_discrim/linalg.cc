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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "povm_discrim/errors.h"

namespace povm_discrim {

Matrix::Matrix(size_t dim) : dim_(dim) {
    if (dim > kInline) {
        large_.resize(dim * dim);
    } else {
        std::fill_n(small_.begin(), dim * dim, Complex(0));
    }
}

Matrix::Matrix(const Matrix &other) : dim_(other.dim_), large_(other.large_) {
    if (dim_ <= kInline) {
        std::copy_n(other.small_.begin(), dim_ * dim_, small_.begin());
    }
}

Matrix::Matrix(Matrix &&other) noexcept : dim_(other.dim_), large_(std::move(other.large_)) {
    if (dim_ <= kInline) {
        std::copy_n(other.small_.begin(), dim_ * dim_, small_.begin());
    }
}

Matrix &Matrix::operator=(const Matrix &other) {
    if (this != &other) {
        dim_ = other.dim_;
        large_ = other.large_;
        if (dim_ <= kInline) {
            std::copy_n(other.small_.begin(), dim_ * dim_, small_.begin());
        }
    }
    return *this;
}

Matrix &Matrix::operator=(Matrix &&other) noexcept {
    if (this != &other) {
        dim_ = other.dim_;
        large_ = std::move(other.large_);
        if (dim_ <= kInline) {
            std::copy_n(other.small_.begin(), dim_ * dim_, small_.begin());
        }
    }
    return *this;
}

Matrix::Matrix(size_t dim, std::vector<Complex> row_major) : Matrix(dim) {
    if (row_major.size() != dim * dim) {
        throw ValidationError("matrix of dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                              " entries, got " + std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), buf());
}

bool Matrix::operator==(const Matrix &other) const {
    auto a = data();
    auto b = other.data();
    return dim_ == other.dim_ && std::equal(a.begin(), a.end(), b.begin());
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
    Matrix m(entries.size());
    for (size_t k = 0; k < entries.size(); k++) {
        m(k, k) = entries[k];
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    size_t d = rows.size();
    std::vector<Complex> data;
    data.reserve(d * d);
    for (const auto &row : rows) {
        if (row.size() != d) {
            throw ValidationError("from_rows: matrix is not square");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(d, std::move(data));
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Matrix Matrix::hermitian_part() const {
    Matrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto &z : data()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : data()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool Matrix::is_hermitian(double tolerance) const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

bool Matrix::has_nan() const {
    auto d = data();
    return std::any_of(d.begin(), d.end(), [](Complex z) {
        return !std::isfinite(z.real()) || !std::isfinite(z.imag());
    });
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (other.dim_ != dim_) {
        throw ValidationError("matrix sum: dimension mismatch");
    }
    auto mine = mut_data();
    auto theirs = other.data();
    for (size_t k = 0; k < mine.size(); k++) {
        mine[k] += theirs[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    if (other.dim_ != dim_) {
        throw ValidationError("matrix difference: dimension mismatch");
    }
    auto mine = mut_data();
    auto theirs = other.data();
    for (size_t k = 0; k < mine.size(); k++) {
        mine[k] -= theirs[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scalar) {
    for (auto &z : mut_data()) {
        z *= scalar;
    }
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    size_t d = a.dim();
    if (b.dim() != d) {
        throw ValidationError("matrix product: dimension mismatch");
    }
    Matrix out(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t k = 0; k < d; k++) {
            Complex aik = a(i, k);
            if (aik == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out.precision(6);
    for (size_t i = 0; i < dim_; i++) {
        out << (i ? "\n[" : "[");
        for (size_t j = 0; j < dim_; j++) {
            auto z = (*this)(i, j);
            out << (j ? ", " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        }
        out << "]";
    }
    return out.str();
}

namespace {

double norm_of(std::span<const Complex> v) {
    double s = 0;
    for (auto z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

}  // namespace

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw ValidationError("ket must have at least one amplitude");
    }
    double n = norm_of(amps_);
    if (!std::isfinite(n) || std::abs(n - 1) > tol::kAlgebraic) {
        throw ValidationError("ket norm " + std::to_string(n) + " differs from 1");
    }
}

Ket Ket::normalized(std::vector<Complex> amplitudes) {
    double n = norm_of(amplitudes);
    if (!(n > 0) || !std::isfinite(n)) {
        throw ValidationError("cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return Ket(std::move(amplitudes));
}

Ket Ket::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw ValidationError("basis index out of range");
    }
    std::vector<Complex> v(dim);
    v[index] = 1;
    return Ket(std::move(v));
}

Matrix Ket::projector() const {
    return outer(*this, *this);
}

Ket Ket::with_canonical_phase() const {
    std::vector<Complex> v = amps_;
    for (auto z : v) {
        if (std::abs(z) > 1e-9) {
            Complex phase = std::abs(z) / z;
            for (auto &w : v) {
                w *= phase;
            }
            break;
        }
    }
    return Ket::normalized(std::move(v));
}

Ket Ket::qubit_perp() const {
    if (dim() != 2) {
        throw ValidationError("qubit_perp needs a qubit ket");
    }
    return Ket({-std::conj(amps_[1]), std::conj(amps_[0])});
}

Complex inner(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("inner product: dimension mismatch");
    }
    Complex s = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

Matrix outer(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ValidationError("outer product: dimension mismatch");
    }
    size_t d = a.size();
    Matrix out(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return out;
}

Matrix outer(const Ket &a, const Ket &b) {
    return outer(a.amplitudes(), b.amplitudes());
}

std::vector<Complex> mat_vec(const Matrix &m, std::span<const Complex> v) {
    if (m.dim() != v.size()) {
        throw ValidationError("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

double trace_product(const Matrix &a, const Matrix &b) {
    size_t d = a.dim();
    if (b.dim() != d) {
        throw ValidationError("trace product: dimension mismatch");
    }
    double s = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            s += (a(i, j) * b(j, i)).real();
        }
    }
    return s;
}

double expectation(const Matrix &a, const Ket &psi) {
    auto av = mat_vec(a, psi.amplitudes());
    Complex s = 0;
    for (size_t k = 0; k < av.size(); k++) {
        s += std::conj(psi[k]) * av[k];
    }
    return s.real();
}

Matrix tensor(const Matrix &a, const Matrix &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    Matrix out(da * db);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < db; k++) {
                for (size_t l = 0; l < db; l++) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Ket tensor(const Ket &a, const Ket &b) {
    std::vector<Complex> v(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t k = 0; k < b.dim(); k++) {
            v[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return Ket::normalized(std::move(v));
}

namespace {

void check_bipartite_dims(const Matrix &rho_ab, size_t dim_a, size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || rho_ab.dim() != dim_a * dim_b) {
        throw ValidationError("partial trace: operator of dim " + std::to_string(rho_ab.dim()) +
                              " does not live on " + std::to_string(dim_a) + "x" + std::to_string(dim_b));
    }
}

}  // namespace

Matrix partial_trace_a(const Matrix &rho_ab, size_t dim_a, size_t dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    Matrix out(dim_b);
    for (size_t j = 0; j < dim_b; j++) {
        for (size_t l = 0; l < dim_b; l++) {
            Complex s = 0;
            for (size_t i = 0; i < dim_a; i++) {
                s += rho_ab(i * dim_b + j, i * dim_b + l);
            }
            out(j, l) = s;
        }
    }
    return out;
}

Matrix partial_trace_b(const Matrix &rho_ab, size_t dim_a, size_t dim_b) {
    check_bipartite_dims(rho_ab, dim_a, dim_b);
    Matrix out(dim_a);
    for (size_t i = 0; i < dim_a; i++) {
        for (size_t k = 0; k < dim_a; k++) {
            Complex s = 0;
            for (size_t j = 0; j < dim_b; j++) {
                s += rho_ab(i * dim_b + j, k * dim_b + j);
            }
            out(i, k) = s;
        }
    }
    return out;
}

Matrix HermitianEigen::reconstruct() const {
    return spectral_map(*this, [](double x) {
        return x;
    });
}

namespace {

HermitianEigen eigs_2x2(const Matrix &h) {
    double a = h(0, 0).real();
    double d = h(1, 1).real();
    Complex b = h(0, 1);
    double mean = 0.5 * (a + d);
    double half_diff = 0.5 * (a - d);
    double r = std::sqrt(half_diff * half_diff + std::norm(b));
    HermitianEigen out;
    out.values = {mean - r, mean + r};
    if (r == 0) {
        out.vectors = {Ket::basis(2, 0), Ket::basis(2, 1)};
        return out;
    }
    // Eigenvector of the larger eigenvalue, built from whichever row is better conditioned.
    std::vector<Complex> top;
    if (half_diff >= 0) {
        top = {half_diff + r, std::conj(b)};
    } else {
        top = {b, r - half_diff};
    }
    Ket upper = Ket::normalized(top);
    out.vectors = {upper.qubit_perp(), upper};
    return out;
}

double off_diagonal_norm(const Matrix &a) {
    double s = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

HermitianEigen eigs_jacobi(Matrix a, bool want_vectors) {
    size_t d = a.dim();
    Matrix v = want_vectors ? Matrix::identity(d) : Matrix();
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > tol::kJacobiOffDiagonal; sweep++) {
        for (size_t p = 0; p + 1 < d; p++) {
            for (size_t q = p + 1; q < d; q++) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                // Phase e^{i phi} makes the (p,q) entry real, then a real Givens rotation zeroes it.
                Complex phase = apq / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                // Columns: a' = a J with J acting on (p,q):
                //   J[p,p]=c, J[p,q]=s*phase, J[q,p]=-s*conj(phase), J[q,q]=c.
                Complex jpq = s * phase;
                Complex jqp = -s * std::conj(phase);
                for (size_t k = 0; k < d; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * jpq + akq * c;
                }
                for (size_t k = 0; k < d; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t k = 0; k < d && want_vectors; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * c;
                }
            }
        }
    }
    std::vector<size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen out;
    for (size_t k : order) {
        out.values.push_back(a(k, k).real());
        if (!want_vectors) {
            continue;
        }
        std::vector<Complex> col(d);
        for (size_t i = 0; i < d; i++) {
            col[i] = v(i, k);
        }
        out.vectors.push_back(Ket::normalized(std::move(col)));
    }
    return out;
}

Matrix checked_hermitian(const Matrix &h) {
    if (h.dim() == 0) {
        throw ValidationError("herm_eigs: empty matrix");
    }
    if (h.has_nan()) {
        throw ValidationError("herm_eigs: non-finite entries");
    }
    if (!h.is_hermitian(tol::kAlgebraic)) {
        throw ValidationError("herm_eigs: matrix is not Hermitian");
    }
    return h.hermitian_part();
}

std::vector<double> eigenvalues(const Matrix &h) {
    Matrix hh = checked_hermitian(h);
    if (hh.dim() == 1) {
        return {hh(0, 0).real()};
    }
    if (hh.dim() == 2) {
        double mean = 0.5 * (hh(0, 0).real() + hh(1, 1).real());
        double half_diff = 0.5 * (hh(0, 0).real() - hh(1, 1).real());
        double r = std::sqrt(half_diff * half_diff + std::norm(hh(0, 1)));
        return {mean - r, mean + r};
    }
    return eigs_jacobi(std::move(hh), false).values;
}

}  // namespace

HermitianEigen herm_eigs(const Matrix &h) {
    Matrix hh = checked_hermitian(h);
    if (hh.dim() == 1) {
        return HermitianEigen{{hh(0, 0).real()}, {Ket::basis(1, 0)}};
    }
    if (hh.dim() == 2) {
        return eigs_2x2(hh);
    }
    return eigs_jacobi(std::move(hh), true);
}

double max_eigenvalue(const Matrix &h) {
    return eigenvalues(h).back();
}

double min_eigenvalue(const Matrix &h) {
    return eigenvalues(h).front();
}

double positive_eigenvalue_sum(const Matrix &h) {
    double s = 0;
    for (double x : eigenvalues(h)) {
        s += std::max(x, 0.0);
    }
    return s;
}

Matrix positive_part(const Matrix &h) {
    return spectral_map(herm_eigs(h), [](double x) {
        return std::max(x, 0.0);
    });
}

std::optional<Matrix> cholesky(const Matrix &a) {
    size_t d = a.dim();
    Matrix l(d);
    for (size_t j = 0; j < d; j++) {
        double diag = a(j, j).real();
        for (size_t k = 0; k < j; k++) {
            diag -= std::norm(l(j, k));
        }
        if (!(diag > 0)) {
            return std::nullopt;
        }
        double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (size_t i = j + 1; i < d; i++) {
            Complex s = a(i, j);
            for (size_t k = 0; k < j; k++) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }
    return l;
}

Matrix inverse(const Matrix &a) {
    size_t d = a.dim();
    Matrix work = a;
    Matrix inv = Matrix::identity(d);
    double scale = std::max(a.max_abs(), 1e-300);
    for (size_t col = 0; col < d; col++) {
        size_t pivot = col;
        for (size_t r = col + 1; r < d; r++) {
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) {
                pivot = r;
            }
        }
        double piv = std::abs(work(pivot, col));
        if (!std::isfinite(piv) || piv <= 1e-300 * scale || piv == 0) {
            throw ValidationError("inverse: singular matrix");
        }
        if (pivot != col) {
            for (size_t j = 0; j < d; j++) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        Complex inv_pivot = 1.0 / work(col, col);
        for (size_t j = 0; j < d; j++) {
            work(col, j) *= inv_pivot;
            inv(col, j) *= inv_pivot;
        }
        for (size_t r = 0; r < d; r++) {
            if (r == col) {
                continue;
            }
            Complex f = work(r, col);
            if (f == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool is_density_matrix(const Matrix &rho) {
    if (rho.dim() == 0 || rho.has_nan() || !rho.is_hermitian(tol::kAlgebraic)) {
        return false;
    }
    if (std::abs(rho.trace() - Complex(1)) > tol::kReconstruction) {
        return false;
    }
    return min_eigenvalue(rho) >= -tol::kReconstruction;
}

void require_density_matrix(const Matrix &rho, const char *what) {
    if (!is_density_matrix(rho)) {
        throw ValidationError(std::string(what) + " is not a density matrix");
    }
}

}  // namespace povm_discrim
