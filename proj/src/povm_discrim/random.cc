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

#include "povm_discrim/random.h"

#include <cmath>

namespace povm_discrim {

namespace {

Complex gaussian(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0, 1);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

}  // namespace

Ket haar_ket(size_t dim, std::mt19937_64 &rng) {
    std::vector<Complex> v(dim);
    for (auto &z : v) {
        z = gaussian(rng);
    }
    return Ket::normalized(std::move(v));
}

Matrix haar_unitary(size_t dim, std::mt19937_64 &rng) {
    std::vector<std::vector<Complex>> cols;
    while (cols.size() < dim) {
        std::vector<Complex> v(dim);
        for (auto &z : v) {
            z = gaussian(rng);
        }
        for (const auto &c : cols) {
            Complex overlap = 0;
            for (size_t i = 0; i < dim; i++) {
                overlap += std::conj(c[i]) * v[i];
            }
            for (size_t i = 0; i < dim; i++) {
                v[i] -= overlap * c[i];
            }
        }
        double n = 0;
        for (auto z : v) {
            n += std::norm(z);
        }
        n = std::sqrt(n);
        if (n < 1e-8) {
            continue;
        }
        for (auto &z : v) {
            z /= n;
        }
        cols.push_back(std::move(v));
    }
    Matrix u(dim);
    for (size_t j = 0; j < dim; j++) {
        for (size_t i = 0; i < dim; i++) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

Matrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    Matrix g(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = gaussian(rng);
        }
    }
    return g.hermitian_part();
}

Matrix random_density(size_t dim, std::mt19937_64 &rng) {
    Matrix g(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = gaussian(rng);
        }
    }
    Matrix rho = (g * g.adjoint()).hermitian_part();
    return rho * Complex(1.0 / rho.trace().real());
}

}  // namespace povm_discrim
