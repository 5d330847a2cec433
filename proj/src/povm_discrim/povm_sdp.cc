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

#include "povm_discrim/povm_sdp.h"

#include <algorithm>
#include <cmath>

#include "povm_discrim/errors.h"

namespace povm_discrim {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kStepFraction = 0.95;

// Orthonormal basis of d x d Hermitian matrices under Re Tr(A B).
std::vector<Matrix> hermitian_basis(size_t d) {
    std::vector<Matrix> basis;
    double s = 1 / std::sqrt(2.0);
    for (size_t j = 0; j < d; j++) {
        Matrix e(d);
        e(j, j) = 1;
        basis.push_back(e);
    }
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            Matrix re(d);
            re(j, k) = s;
            re(k, j) = s;
            basis.push_back(re);
            Matrix im(d);
            im(j, k) = Complex(0, s);
            im(k, j) = Complex(0, -s);
            basis.push_back(im);
        }
    }
    return basis;
}

// Solves A x = b in place (A is n x n row-major). Returns false when singular.
bool lu_solve(std::vector<double> &a, std::vector<double> &b, size_t n) {
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; r++) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (a[pivot * n + col] == 0 || !std::isfinite(a[pivot * n + col])) {
            return false;
        }
        if (pivot != col) {
            for (size_t j = 0; j < n; j++) {
                std::swap(a[pivot * n + j], a[col * n + j]);
            }
            std::swap(b[pivot], b[col]);
        }
        for (size_t r = col + 1; r < n; r++) {
            double f = a[r * n + col] / a[col * n + col];
            if (f == 0) {
                continue;
            }
            for (size_t j = col; j < n; j++) {
                a[r * n + j] -= f * a[col * n + j];
            }
            b[r] -= f * b[col];
        }
    }
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t j = i + 1; j < n; j++) {
            s -= a[i * n + j] * b[j];
        }
        b[i] = s / a[i * n + i];
    }
    return true;
}

// Largest alpha in (0, cap] keeping X + alpha dX positive semidefinite; X must be positive definite.
double max_step(const Matrix &x, const Matrix &dx, double cap) {
    auto l = cholesky(x);
    if (!l) {
        return 0;
    }
    Matrix li;
    try {
        li = inverse(*l);
    } catch (const ValidationError &) {
        return 0;
    }
    double lam = min_eigenvalue((li * dx * li.adjoint()).hermitian_part());
    if (lam >= 0) {
        return cap;
    }
    return std::min(cap, -1 / lam);
}

struct Iterate {
    std::vector<Matrix> m;
    std::vector<Matrix> z;
    Matrix y;
};

// Interior-point solve on an r-dimensional space where the costs are already restricted.
Iterate interior_point(const std::vector<Matrix> &c, int &iterations) {
    size_t n = c.size();
    size_t r = c[0].dim();
    Matrix eye = Matrix::identity(r);
    double top = 0;
    double scale = 0;
    for (const auto &ck : c) {
        top = std::max(top, max_eigenvalue(ck));
        scale = std::max(scale, ck.max_abs());
    }
    scale = std::max(scale, 1e-300);

    Iterate it;
    it.y = eye * (top + scale);
    for (size_t k = 0; k < n; k++) {
        it.m.push_back(eye * (1.0 / n));
        it.z.push_back((it.y - c[k]).hermitian_part());
    }

    auto basis = hermitian_basis(r);
    size_t nb = basis.size();
    auto coords = [&](const Matrix &h, std::vector<double> &out) {
        out.resize(nb);
        for (size_t b = 0; b < nb; b++) {
            out[b] = trace_product(basis[b], h);
        }
    };
    auto from_coords = [&](const std::vector<double> &x) {
        Matrix h(r);
        for (size_t b = 0; b < nb; b++) {
            h += basis[b] * x[b];
        }
        return h;
    };

    iterations = 0;
    for (; iterations < kMaxIterations; iterations++) {
        std::vector<Matrix> zinv(n);
        double comp = 0;
        bool interior = true;
        for (size_t k = 0; k < n && interior; k++) {
            interior = cholesky(it.z[k]).has_value() && cholesky(it.m[k]).has_value();
            if (interior) {
                try {
                    zinv[k] = inverse(it.z[k]).hermitian_part();
                } catch (const ValidationError &) {
                    interior = false;
                    break;
                }
                comp += trace_product(it.m[k], it.z[k]);
            }
        }
        if (!interior) {
            break;
        }
        Matrix rp = eye;
        std::vector<Matrix> rd(n);
        double res = 0;
        for (size_t k = 0; k < n; k++) {
            rp -= it.m[k];
            rd[k] = it.y - c[k] - it.z[k];
            res = std::max(res, rd[k].max_abs());
        }
        res = std::max(res, rp.max_abs());
        if (comp <= 1e-11 * scale && res <= 1e-9 * scale) {
            break;
        }
        double mu = comp / (n * r);

        // Schur operator L(dY) = sum_k H(M_k dY Z_k^-1) in the Hermitian basis.
        std::vector<double> schur(nb * nb);
        std::vector<double> col;
        for (size_t b = 0; b < nb; b++) {
            Matrix img(r);
            for (size_t k = 0; k < n; k++) {
                img += it.m[k] * basis[b] * zinv[k];
            }
            coords(img.hermitian_part(), col);
            for (size_t a = 0; a < nb; a++) {
                schur[a * nb + b] = col[a];
            }
        }

        auto direction = [&](double sigma_mu, const std::vector<Matrix> *corr, std::vector<Matrix> &dm,
                             std::vector<Matrix> &dz, Matrix &dy) -> bool {
            Matrix rhs = rp * Complex(-1);
            for (size_t k = 0; k < n; k++) {
                Matrix t = zinv[k] * sigma_mu - it.m[k] - (it.m[k] * rd[k] * zinv[k]).hermitian_part();
                if (corr) {
                    t -= ((*corr)[k] * zinv[k]).hermitian_part();
                }
                rhs += t;
            }
            std::vector<double> x;
            coords(rhs, x);
            std::vector<double> a = schur;
            if (!lu_solve(a, x, nb)) {
                return false;
            }
            dy = from_coords(x);
            dm.assign(n, Matrix());
            dz.assign(n, Matrix());
            for (size_t k = 0; k < n; k++) {
                dz[k] = dy + rd[k];
                Matrix t = zinv[k] * sigma_mu - it.m[k] - (it.m[k] * dz[k] * zinv[k]).hermitian_part();
                if (corr) {
                    t -= ((*corr)[k] * zinv[k]).hermitian_part();
                }
                dm[k] = t;
            }
            return true;
        };
        auto steps = [&](const std::vector<Matrix> &dm, const std::vector<Matrix> &dz, double cap,
                         double &ap, double &ad) {
            ap = cap;
            ad = cap;
            for (size_t k = 0; k < n; k++) {
                ap = std::min(ap, max_step(it.m[k], dm[k], cap));
                ad = std::min(ad, max_step(it.z[k], dz[k], cap));
            }
        };

        std::vector<Matrix> dm, dz;
        Matrix dy;
        if (!direction(0, nullptr, dm, dz, dy)) {
            break;
        }
        double ap, ad;
        steps(dm, dz, 1.0, ap, ad);
        double comp_aff = 0;
        for (size_t k = 0; k < n; k++) {
            comp_aff += trace_product(it.m[k] + dm[k] * ap, it.z[k] + dz[k] * ad);
        }
        double sigma = std::clamp(std::pow(std::max(comp_aff, 0.0) / comp, 3), 0.0, 1.0);
        std::vector<Matrix> corr(n);
        for (size_t k = 0; k < n; k++) {
            corr[k] = dm[k] * dz[k];
        }
        if (!direction(sigma * mu, &corr, dm, dz, dy)) {
            break;
        }
        steps(dm, dz, 1e300, ap, ad);
        ap = std::min(1.0, kStepFraction * ap);
        ad = std::min(1.0, kStepFraction * ad);
        if (ap <= 0 || ad <= 0) {
            break;
        }
        for (size_t k = 0; k < n; k++) {
            it.m[k] = (it.m[k] + dm[k] * ap).hermitian_part();
            it.z[k] = (it.z[k] + dz[k] * ad).hermitian_part();
        }
        it.y = (it.y + dy * ad).hermitian_part();
    }
    return it;
}

// Projects candidate POVM elements onto an exactly complete POVM: clip to PSD, then
// conjugate by S^{-1/2} where S is their sum.
std::vector<Matrix> repair_povm(const std::vector<Matrix> &m) {
    size_t d = m[0].dim();
    std::vector<Matrix> out;
    Matrix s(d);
    for (const auto &mk : m) {
        out.push_back(positive_part(mk.hermitian_part()));
        s += out.back();
    }
    auto eig = herm_eigs(s.hermitian_part());
    if (eig.values.front() <= 1e-14) {
        // Degenerate sum: hand the missing part of the identity to the first outcome.
        Matrix deficit = Matrix::identity(d) - s;
        out[0] = positive_part((out[0] + deficit).hermitian_part());
        s = Matrix(d);
        for (const auto &mk : out) {
            s += mk;
        }
        eig = herm_eigs(s.hermitian_part());
    }
    Matrix w = spectral_map(eig, [](double x) {
        return 1 / std::sqrt(std::max(x, 1e-300));
    });
    for (auto &mk : out) {
        mk = (w * mk * w).hermitian_part();
    }
    return out;
}

double objective(std::span<const Matrix> costs, const std::vector<Matrix> &povm) {
    double v = 0;
    for (size_t k = 0; k < costs.size(); k++) {
        v += trace_product(costs[k], povm[k]);
    }
    return v;
}

PovmSdpResult solve_two(std::span<const Matrix> costs) {
    size_t d = costs[0].dim();
    auto eig = herm_eigs((costs[0] - costs[1]).hermitian_part());
    Matrix p(d);
    for (size_t k = 0; k < d; k++) {
        if (eig.values[k] > 0) {
            p += eig.vectors[k].projector();
        }
    }
    PovmSdpResult out;
    out.povm = {p, Matrix::identity(d) - p};
    out.primal_value = objective(costs, out.povm);
    Matrix y = (costs[1] + spectral_map(eig, [](double x) {
                    return std::max(x, 0.0);
                })).hermitian_part();
    out.dual_bound = shifted_dual_bound(y, costs, &out.dual_operator);
    return out;
}

}  // namespace

double shifted_dual_bound(const Matrix &y, std::span<const Matrix> costs, Matrix *feasible_y) {
    size_t d = y.dim();
    double shift = 0;
    for (const auto &c : costs) {
        shift = std::max(shift, max_eigenvalue((c - y).hermitian_part()));
    }
    if (feasible_y) {
        *feasible_y = y + Matrix::identity(d) * shift;
    }
    return y.trace().real() + d * shift;
}

PovmSdpResult solve_povm_sdp(std::span<const Matrix> costs) {
    if (costs.empty()) {
        throw ValidationError("solve_povm_sdp: no outcomes");
    }
    size_t d = costs[0].dim();
    for (const auto &c : costs) {
        if (c.dim() != d) {
            throw ValidationError("solve_povm_sdp: cost dimension mismatch");
        }
        if (!c.is_hermitian(tol::kAlgebraic)) {
            throw ValidationError("solve_povm_sdp: cost is not Hermitian");
        }
    }
    size_t n = costs.size();
    if (n == 1) {
        PovmSdpResult out;
        out.povm = {Matrix::identity(d)};
        out.primal_value = costs[0].trace().real();
        out.dual_bound = shifted_dual_bound(costs[0].hermitian_part(), costs, &out.dual_operator);
        return out;
    }
    if (n == 2) {
        return solve_two(costs);
    }

    // Restrict to the joint support of the costs; off it every cost vanishes.
    Matrix support(d);
    for (const auto &c : costs) {
        support += spectral_map(herm_eigs(c.hermitian_part()), [](double x) {
            return std::abs(x);
        });
    }
    auto seig = herm_eigs(support.hermitian_part());
    double smax = std::max(seig.values.back(), 0.0);
    std::vector<Ket> keep;
    for (size_t k = 0; k < d; k++) {
        if (seig.values[k] > 1e-13 * smax && smax > 0) {
            keep.push_back(seig.vectors[k]);
        }
    }
    size_t r = keep.size();

    PovmSdpResult out;
    std::vector<Matrix> candidates_y;
    if (r == 0) {
        out.povm.assign(n, Matrix(d));
        out.povm[0] = Matrix::identity(d);
        candidates_y.push_back(Matrix(d));
    } else {
        // Columns of V are the kept eigenvectors; reduced operator is V^dag A V.
        auto reduce = [&](const Matrix &a) {
            Matrix red(r);
            for (size_t i = 0; i < r; i++) {
                auto av = mat_vec(a, keep[i].amplitudes());
                for (size_t j = 0; j < r; j++) {
                    Complex s = 0;
                    for (size_t t = 0; t < d; t++) {
                        s += std::conj(keep[j][t]) * av[t];
                    }
                    red(j, i) = s;
                }
            }
            return red.hermitian_part();
        };
        auto lift = [&](const Matrix &a) {
            Matrix full(d);
            for (size_t i = 0; i < r; i++) {
                for (size_t j = 0; j < r; j++) {
                    if (a(i, j) != Complex(0)) {
                        full += outer(keep[i], keep[j]) * a(i, j);
                    }
                }
            }
            return full;
        };
        std::vector<Matrix> reduced;
        for (const auto &c : costs) {
            reduced.push_back(reduce(c));
        }
        Iterate it = interior_point(reduced, out.iterations);
        std::vector<Matrix> m_red = repair_povm(it.m);
        Matrix complement = Matrix::identity(d) - lift(Matrix::identity(r));
        out.povm.clear();
        for (size_t k = 0; k < n; k++) {
            Matrix mk = lift(m_red[k]);
            if (k == 0) {
                mk += complement;
            }
            out.povm.push_back(mk.hermitian_part());
        }
        candidates_y.push_back(lift(it.y).hermitian_part());
    }
    out.povm = repair_povm(out.povm);
    out.primal_value = objective(costs, out.povm);
    Matrix sum_cm(d);
    for (size_t k = 0; k < n; k++) {
        sum_cm += costs[k] * out.povm[k];
    }
    candidates_y.push_back(sum_cm.hermitian_part());

    out.dual_bound = INFINITY;
    for (const auto &y : candidates_y) {
        Matrix feasible;
        double bound = shifted_dual_bound(y, costs, &feasible);
        if (bound < out.dual_bound) {
            out.dual_bound = bound;
            out.dual_operator = feasible;
        }
    }
    return out;
}

}  // namespace povm_discrim
