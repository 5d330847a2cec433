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

#include "oracles.h"

#include <algorithm>
#include <cmath>

namespace oracle {

double overlap2(const Qubit &a, const Qubit &b) {
    return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

namespace {

template <typename Reduce>
double over_pairs(const std::vector<Qubit> &kets, const std::vector<double> &priors, double sign, Reduce reduce,
                  double init) {
    double best = init;
    for (size_t x = 0; x < kets.size(); x++) {
        for (size_t y = x + 1; y < kets.size(); y++) {
            double s = priors[x] + priors[y];
            double root = std::sqrt(std::max(0.0, s * s - 4 * priors[x] * priors[y] * overlap2(kets[x], kets[y])));
            best = reduce(best, 0.5 * (s + sign * root));
        }
    }
    return best;
}

}  // namespace

double dms_projective(const std::vector<Qubit> &kets, const std::vector<double> &priors) {
    double single = *std::max_element(priors.begin(), priors.end());
    return over_pairs(kets, priors, 1, [](double a, double b) { return std::max(a, b); }, single);
}

double ams_projective(const std::vector<Qubit> &kets, const std::vector<double> &priors) {
    double single = *std::min_element(priors.begin(), priors.end());
    return 1 - over_pairs(kets, priors, -1, [](double a, double b) { return std::min(a, b); }, single);
}

double dbarms_projective_pair(const Qubit &a, const Qubit &b) {
    double o = overlap2(a, b);
    return 0.5 + 0.5 * std::sqrt(std::max(0.0, 1 - o * o));
}

double dme_projective_pair_maxent(double theta) {
    return 0.5 + 0.5 * std::abs(std::sin(theta / 2));
}

double positive_part_trace(const Mat2 &a) {
    double p = a[0][0].real(), q = a[1][1].real();
    double mid = (p + q) / 2;
    double radius = std::sqrt((p - q) * (p - q) / 4 + std::norm(a[0][1]));
    return std::max(0.0, mid + radius) + std::max(0.0, mid - radius);
}

double dme_pair(const std::vector<Mat2> &f1, const std::vector<Mat2> &f2, const std::array<C, 4> &psi) {
    // Bob's unnormalized state for Kraus F on A: sigma_jl = sum_i (F psi)_{ij} conj((F psi)_{il}).
    auto bob = [&](const Mat2 &f) {
        C w[2][2] = {};
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                for (int k = 0; k < 2; k++) {
                    w[i][j] += f[i][k] * psi[2 * k + j];
                }
            }
        }
        Mat2 sigma{};
        for (int j = 0; j < 2; j++) {
            for (int l = 0; l < 2; l++) {
                for (int i = 0; i < 2; i++) {
                    sigma[j][l] += w[i][j] * std::conj(w[i][l]);
                }
            }
        }
        return sigma;
    };
    size_t outcomes = std::max(f1.size(), f2.size());
    double total = 0;
    for (size_t a = 0; a < outcomes; a++) {
        Mat2 s1{}, s2{};
        if (a < f1.size()) {
            s1 = bob(f1[a]);
        }
        if (a < f2.size()) {
            s2 = bob(f2[a]);
        }
        Mat2 diff{};
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                diff[r][c] = 0.5 * (s1[r][c] - s2[r][c]);
            }
        }
        // Helstrom: q2 + sum of positive eigenvalues of q1 rho1 - q2 rho2.
        double q2 = 0.5 * (s2[0][0] + s2[1][1]).real();
        total += q2 + positive_part_trace(diff);
    }
    return total;
}

bool caves_antidistinguishable(const Qubit &a, const Qubit &b, const Qubit &c) {
    double x = overlap2(a, b), y = overlap2(a, c), z = overlap2(b, c);
    double s = x + y + z;
    return s < 1 && (s - 1) * (s - 1) >= 4 * x * y * z - 1e-12;
}

}  // namespace oracle
