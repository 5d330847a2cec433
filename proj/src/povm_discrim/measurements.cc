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

#include "povm_discrim/measurements.h"

#include <cmath>
#include <sstream>

#include "povm_discrim/errors.h"

namespace povm_discrim {

KrausMeasurement::KrausMeasurement(std::string name, std::vector<Matrix> kraus)
    : name_(std::move(name)), kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw ValidationError("measurement '" + name_ + "' has no outcomes");
    }
    size_t d = kraus_[0].dim();
    if (d == 0) {
        throw ValidationError("measurement '" + name_ + "' has zero dimension");
    }
    for (const auto &f : kraus_) {
        if (f.dim() != d) {
            throw ValidationError("measurement '" + name_ + "' mixes Kraus operators of different dimensions");
        }
        povm_.push_back((f.adjoint() * f).hermitian_part());
    }
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    out.precision(6);
    if (ok) {
        out << "ok (max deviation " << max_deviation << ")";
        return out.str();
    }
    if (has_nan) {
        out << "non-finite Kraus entries";
    } else {
        out << "completeness violated: |sum F^dag F - I| = " << max_deviation << " at entry (" << worst_row + 1
            << "," << worst_col + 1 << ")";
    }
    return out.str();
}

ValidationReport validate(const KrausMeasurement &m) {
    ValidationReport report;
    for (const auto &f : m.kraus()) {
        if (f.has_nan()) {
            report.ok = false;
            report.has_nan = true;
            return report;
        }
    }
    size_t d = m.dim();
    Matrix total(d);
    for (const auto &e : m.povm_elements()) {
        total += e;
    }
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            double dev = std::abs(total(i, j) - Complex(i == j ? 1.0 : 0.0));
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst_row = i;
                report.worst_col = j;
            }
        }
    }
    report.ok = report.max_deviation <= tol::kCompleteness;
    return report;
}

MeasurementSet::MeasurementSet(std::vector<KrausMeasurement> measurements, std::vector<double> priors)
    : measurements_(std::move(measurements)), priors_(std::move(priors)) {
    if (measurements_.empty()) {
        throw ValidationError("measurement set is empty");
    }
    if (priors_.size() != measurements_.size()) {
        throw ValidationError("measurement set: " + std::to_string(measurements_.size()) + " measurements but " +
                              std::to_string(priors_.size()) + " priors");
    }
    double sum = 0;
    for (double p : priors_) {
        if (!(p > 0) || !std::isfinite(p)) {
            throw ValidationError("measurement set: priors must be positive");
        }
        sum += p;
    }
    if (std::abs(sum - 1) > tol::kAlgebraic) {
        throw ValidationError("measurement set: priors sum to " + std::to_string(sum) + ", not 1");
    }
    for (const auto &m : measurements_) {
        if (m.dim() != measurements_[0].dim()) {
            throw ValidationError("measurement set: '" + m.name() + "' has a different dimension");
        }
        auto report = validate(m);
        if (!report.ok) {
            throw ValidationError("measurement '" + m.name() + "': " + report.str());
        }
        outcomes_ = std::max(outcomes_, m.outcomes());
    }
}

MeasurementSet MeasurementSet::uniform(std::vector<KrausMeasurement> measurements) {
    std::vector<double> priors(measurements.size(), 1.0 / measurements.size());
    return MeasurementSet(std::move(measurements), std::move(priors));
}

PostState post_state(const Matrix &f, const Matrix &rho) {
    if (f.dim() != rho.dim()) {
        throw ValidationError("post_state: dimension mismatch");
    }
    Matrix unnormalized = (f * rho * f.adjoint()).hermitian_part();
    PostState out;
    out.probability = std::max(0.0, unnormalized.trace().real());
    if (out.probability > tol::kZeroProbability) {
        out.state = unnormalized * (1 / out.probability);
    }
    return out;
}

BipartitePost bipartite_post(const Matrix &f, const Matrix &rho_ab, size_t dim_a, size_t dim_b) {
    if (f.dim() != dim_a || rho_ab.dim() != dim_a * dim_b) {
        throw ValidationError("bipartite_post: dimension mismatch");
    }
    Matrix lifted = tensor(f, Matrix::identity(dim_b));
    auto post = post_state(lifted, rho_ab);
    BipartitePost out;
    out.probability = post.probability;
    if (post.state) {
        out.bob = partial_trace_a(*post.state, dim_a, dim_b).hermitian_part();
        out.joint = std::move(post.state);
    }
    return out;
}

std::vector<Complex> apply_kraus(const Matrix &f, const Ket &psi, size_t dim_b) {
    size_t da = f.dim();
    if (psi.dim() != da * dim_b) {
        throw ValidationError("apply_kraus: probe dimension mismatch");
    }
    std::vector<Complex> out(psi.dim());
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            Complex fij = f(i, j);
            if (fij == Complex(0)) {
                continue;
            }
            for (size_t k = 0; k < dim_b; k++) {
                out[i * dim_b + k] += fij * psi[j * dim_b + k];
            }
        }
    }
    return out;
}

}  // namespace povm_discrim
