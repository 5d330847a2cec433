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

#include "povm_discrim/ensembles.h"

#include <atomic>
#include <algorithm>
#include <cmath>
#include <string>

#include "povm_discrim/errors.h"
#include "povm_discrim/povm_sdp.h"

namespace povm_discrim {

WeightedEnsemble::WeightedEnsemble(std::vector<Matrix> states, std::vector<double> weights, size_t label_count) {
    if (states.size() != weights.size()) {
        throw ValidationError("ensemble: " + std::to_string(states.size()) + " states but " +
                              std::to_string(weights.size()) + " weights");
    }
    if (states.empty()) {
        throw ValidationError("ensemble: no states");
    }
    label_count_ = label_count == 0 ? states.size() : label_count;
    if (label_count_ < states.size()) {
        throw ValidationError("ensemble: fewer labels than states");
    }
    dim_ = states[0].dim();
    for (size_t k = 0; k < states.size(); k++) {
        if (!std::isfinite(weights[k]) || weights[k] < 0) {
            throw ValidationError("ensemble: weight " + std::to_string(k) + " is negative or not finite");
        }
        if (states[k].dim() != dim_) {
            throw ValidationError("ensemble: states have different dimensions");
        }
        if (weights[k] <= tol::kZeroProbability) {
            continue;
        }
        require_density_matrix(states[k], "ensemble member");
        states_.push_back(std::move(states[k]));
        weights_.push_back(weights[k]);
        labels_.push_back(k);
    }
}

WeightedEnsemble WeightedEnsemble::pure(const std::vector<Ket> &kets, std::vector<double> weights) {
    std::vector<Matrix> states;
    for (const auto &k : kets) {
        states.push_back(k.projector());
    }
    return WeightedEnsemble(std::move(states), std::move(weights));
}

double WeightedEnsemble::total_weight() const {
    double s = 0;
    for (double q : weights_) {
        s += q;
    }
    return s;
}

bool DiscrimCertificate::closed() const {
    return gap <= tol::kCertificateGap && primal_value <= dual_upper_bound + tol::kCertificateSoundness;
}

namespace {

void require_positive(double q1, double q2) {
    if (!(q1 > 0) || !(q2 > 0) || !std::isfinite(q1) || !std::isfinite(q2)) {
        throw ValidationError("weights must be positive and finite");
    }
}

std::atomic<long> g_calls{0};
std::atomic<long> g_open{0};
std::atomic<double> g_max_gap{0};

void record(const DiscrimCertificate &c) {
    g_calls++;
    if (!c.closed()) {
        g_open++;
    }
    double seen = g_max_gap.load();
    while (c.gap > seen && !g_max_gap.compare_exchange_weak(seen, c.gap)) {
    }
}

EnsembleSolution from_sdp(PovmSdpResult r, double offset) {
    EnsembleSolution out;
    out.value = offset + r.primal_value;
    out.povm = std::move(r.povm);
    out.certificate.primal_value = out.value;
    out.certificate.dual_upper_bound = offset + r.dual_bound;
    out.certificate.dual_operator = std::move(r.dual_operator);
    out.certificate.gap = r.dual_bound - r.primal_value;
    return out;
}

/// Spreads per-member POVM elements over all labels; absent labels get 0.
std::vector<Matrix> by_label(const WeightedEnsemble &e, std::vector<Matrix> member_povm) {
    std::vector<Matrix> povm(e.label_count(), Matrix(e.dim()));
    for (size_t k = 0; k < e.size(); k++) {
        povm[e.labels()[k]] = std::move(member_povm[k]);
    }
    return povm;
}

}  // namespace

double ds_pair(const Matrix &rho1, const Matrix &rho2, double q1, double q2) {
    require_positive(q1, q2);
    if (rho1.dim() != rho2.dim()) {
        throw ValidationError("ds_pair: dimension mismatch");
    }
    return q2 + positive_eigenvalue_sum((rho1 * q1 - rho2 * q2).hermitian_part());
}

double ds_pure_pair(const Ket &psi1, const Ket &psi2, double q1, double q2) {
    require_positive(q1, q2);
    double s = q1 + q2;
    double overlap2 = std::norm(inner(psi1, psi2));
    return 0.5 * (s + std::sqrt(std::max(0.0, s * s - 4 * q1 * q2 * overlap2)));
}

bool is_antidistinguishable_triple(const Ket &psi1, const Ket &psi2, const Ket &psi3) {
    double x1 = std::norm(inner(psi1, psi2));
    double x2 = std::norm(inner(psi1, psi3));
    double x3 = std::norm(inner(psi2, psi3));
    double s = x1 + x2 + x3;
    // Real (great-circle) qubit triples sit exactly on the boundary of the second
    // inequality, so it is compared with the algebraic tolerance.
    return s < 1 && (s - 1) * (s - 1) >= 4 * x1 * x2 * x3 - tol::kAlgebraic;
}

EnsembleSolution ds_general(const WeightedEnsemble &ensemble) {
    // Labels without a member have zero cost and never help, so only members enter the program.
    std::vector<Matrix> costs;
    for (size_t k = 0; k < ensemble.size(); k++) {
        costs.push_back(ensemble.states()[k] * ensemble.weights()[k]);
    }
    EnsembleSolution out = from_sdp(solve_povm_sdp(costs), 0);
    out.povm = by_label(ensemble, std::move(out.povm));
    record(out.certificate);
    return out;
}

EnsembleSolution as_general(const WeightedEnsemble &ensemble) {
    double total = ensemble.total_weight();
    EnsembleSolution out;
    if (ensemble.size() < ensemble.label_count()) {
        // Always answer a label that has no member: every guess is correct.
        size_t free_label = 0;
        while (std::find(ensemble.labels().begin(), ensemble.labels().end(), free_label) != ensemble.labels().end()) {
            free_label++;
        }
        out.value = total;
        out.povm.assign(ensemble.label_count(), Matrix(ensemble.dim()));
        out.povm[free_label] = Matrix::identity(ensemble.dim());
        out.certificate.primal_value = total;
        out.certificate.dual_upper_bound = total;
        out.certificate.dual_operator = Matrix(ensemble.dim());
        record(out.certificate);
        return out;
    }
    std::vector<Matrix> costs;
    for (size_t k = 0; k < ensemble.size(); k++) {
        costs.push_back(ensemble.states()[k] * -ensemble.weights()[k]);
    }
    out = from_sdp(solve_povm_sdp(costs), total);
    // -Y is the lower bound operator of the minimization: q_k rho_k >= -Y for every k.
    out.certificate.dual_operator *= Complex(-1);
    out.povm = by_label(ensemble, std::move(out.povm));
    record(out.certificate);
    return out;
}

CertificateStats certificate_stats() {
    return {g_calls.load(), g_open.load(), g_max_gap.load()};
}

void reset_certificate_stats() {
    g_calls = 0;
    g_open = 0;
    g_max_gap = 0;
}

}  // namespace povm_discrim
