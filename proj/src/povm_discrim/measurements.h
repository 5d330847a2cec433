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

#ifndef POVM_DISCRIM_MEASUREMENTS_H
#define POVM_DISCRIM_MEASUREMENTS_H

#include <optional>
#include <string>
#include <vector>

#include "povm_discrim/linalg.h"

namespace povm_discrim {

/// Ordered Kraus operators F_a of one measurement; M_a = F_a^dag F_a.
/// Construction only checks shapes. Use `validate` for completeness.
class KrausMeasurement {
   public:
    KrausMeasurement(std::string name, std::vector<Matrix> kraus);

    const std::string &name() const noexcept {
        return name_;
    }
    size_t dim() const noexcept {
        return kraus_[0].dim();
    }
    size_t outcomes() const noexcept {
        return kraus_.size();
    }
    const Matrix &kraus(size_t a) const {
        return kraus_.at(a);
    }
    const std::vector<Matrix> &kraus() const noexcept {
        return kraus_;
    }
    const Matrix &povm_element(size_t a) const {
        return povm_.at(a);
    }
    const std::vector<Matrix> &povm_elements() const noexcept {
        return povm_;
    }

   private:
    std::string name_;
    std::vector<Matrix> kraus_;
    std::vector<Matrix> povm_;
};

struct ValidationReport {
    bool ok = true;
    /// max |sum_a F_a^dag F_a - I| entrywise.
    double max_deviation = 0;
    size_t worst_row = 0;
    size_t worst_col = 0;
    bool has_nan = false;

    std::string str() const;
};

/// Completeness and finiteness check. Never throws.
ValidationReport validate(const KrausMeasurement &m);

/// n measurements on a common dimension with priors p_x > 0 summing to 1.
/// Outcome counts may differ; missing outcomes act as zero POVM elements.
class MeasurementSet {
   public:
    /// Throws ValidationError on incomplete measurements, mismatched
    /// dimensions or malformed priors.
    MeasurementSet(std::vector<KrausMeasurement> measurements, std::vector<double> priors);
    static MeasurementSet uniform(std::vector<KrausMeasurement> measurements);

    size_t size() const noexcept {
        return measurements_.size();
    }
    size_t dim() const noexcept {
        return measurements_[0].dim();
    }
    /// Largest outcome count over the set.
    size_t outcomes() const noexcept {
        return outcomes_;
    }
    const KrausMeasurement &measurement(size_t x) const {
        return measurements_.at(x);
    }
    const std::vector<KrausMeasurement> &measurements() const noexcept {
        return measurements_;
    }
    double prior(size_t x) const {
        return priors_.at(x);
    }
    const std::vector<double> &priors() const noexcept {
        return priors_;
    }
    /// Whether measurement x has an outcome a.
    bool has_outcome(size_t x, size_t a) const {
        return a < measurements_.at(x).outcomes();
    }

   private:
    std::vector<KrausMeasurement> measurements_;
    std::vector<double> priors_;
    size_t outcomes_ = 0;
};

struct PostState {
    double probability = 0;
    /// Absent when probability <= tol::kZeroProbability.
    std::optional<Matrix> state;
};

/// p = Tr(rho F^dag F) and F rho F^dag / p.
PostState post_state(const Matrix &f, const Matrix &rho);

struct BipartitePost {
    double probability = 0;
    std::optional<Matrix> joint;
    std::optional<Matrix> bob;
};

/// Applies F (x) I to rho_AB; returns the normalized joint state and Bob's reduction.
BipartitePost bipartite_post(const Matrix &f, const Matrix &rho_ab, size_t dim_a, size_t dim_b);

/// Pure-probe variant: unnormalized F|psi> (or (F (x) I)|psi> when dim_b > 1).
/// Its squared norm is the outcome probability.
std::vector<Complex> apply_kraus(const Matrix &f, const Ket &psi, size_t dim_b = 1);

}  // namespace povm_discrim

#endif
