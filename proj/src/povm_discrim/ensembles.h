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

#ifndef POVM_DISCRIM_ENSEMBLES_H
#define POVM_DISCRIM_ENSEMBLES_H

#include <vector>

#include "povm_discrim/linalg.h"

namespace povm_discrim {

/// States with strictly positive weights (not necessarily summing to 1).
///
/// Each member carries a label in [0, label_count). Guessing happens over all
/// labels, including ones whose member was dropped for having zero weight: a
/// label with no member is always a correct "not this one" answer, and never a
/// correct "this one" answer.
class WeightedEnsemble {
   public:
    /// Members with weight <= tol::kZeroProbability are dropped; negative or
    /// non-finite weights and mismatched dimensions throw ValidationError.
    /// `label_count` = 0 means one label per input state.
    WeightedEnsemble(std::vector<Matrix> states, std::vector<double> weights, size_t label_count = 0);
    static WeightedEnsemble pure(const std::vector<Ket> &kets, std::vector<double> weights);

    size_t size() const noexcept {
        return states_.size();
    }
    size_t dim() const noexcept {
        return dim_;
    }
    size_t label_count() const noexcept {
        return label_count_;
    }
    const std::vector<Matrix> &states() const noexcept {
        return states_;
    }
    const std::vector<double> &weights() const noexcept {
        return weights_;
    }
    /// Original index of each kept member.
    const std::vector<size_t> &labels() const noexcept {
        return labels_;
    }
    double total_weight() const;

   private:
    std::vector<Matrix> states_;
    std::vector<double> weights_;
    std::vector<size_t> labels_;
    size_t dim_ = 0;
    size_t label_count_ = 0;
};

struct DiscrimCertificate {
    double primal_value = 0;
    double dual_upper_bound = 0;
    /// Y with Y >= q_k rho_k (distinguishing) or the analogous operator of the
    /// minimization (antidistinguishing), after the feasibility shift.
    Matrix dual_operator;
    double gap = 0;

    bool closed() const;
};

struct EnsembleSolution {
    double value = 0;
    /// One element per label.
    std::vector<Matrix> povm;
    DiscrimCertificate certificate;
};

/// q2 + sum of positive eigenvalues of q1 rho1 - q2 rho2.
double ds_pair(const Matrix &rho1, const Matrix &rho2, double q1, double q2);
/// Closed form for two pure states.
double ds_pure_pair(const Ket &psi1, const Ket &psi2, double q1, double q2);
/// Perfect antidistinguishability test for three pure states from their pairwise overlaps.
bool is_antidistinguishable_triple(const Ket &psi1, const Ket &psi2, const Ket &psi3);

/// max over POVMs of sum_k q_k Tr(rho_k M_k), with a dual certificate.
EnsembleSolution ds_general(const WeightedEnsemble &ensemble);
/// sum_k q_k - min over POVMs of sum_k q_k Tr(rho_k M_k), with a dual certificate.
/// The bracket is [value, dual_upper_bound] in both cases.
EnsembleSolution as_general(const WeightedEnsemble &ensemble);

/// Process-wide tally of ds_general/as_general certificates (thread-safe).
struct CertificateStats {
    long calls = 0;
    /// Calls whose certificate was not closed().
    long open = 0;
    double max_gap = 0;
};
CertificateStats certificate_stats();
void reset_certificate_stats();

}  // namespace povm_discrim

#endif
