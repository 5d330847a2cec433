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

#ifndef POVM_DISCRIM_OPTIMIZE_H
#define POVM_DISCRIM_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "povm_discrim/linalg.h"

namespace povm_discrim {

struct SearchBudget {
    /// Grid points per angle (qubit probes) or sqrt of the quasi-random sample count.
    int grid = 64;
    /// Total local refinements, including the top grid cells.
    int starts = 64;
    /// Objective evaluations per local refinement.
    int max_steps = 2000;
    uint64_t seed = 20240611;
    double tolerance = 1e-7;

    /// "grid,starts,steps,tol". Throws ValidationError on malformed or nonpositive fields.
    static SearchBudget parse(std::string_view text);
    /// Defaults overridden by POVM_DISCRIM_BUDGET when set.
    static SearchBudget from_env();
    std::string str() const;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
    bool non_finite = false;
};

/// Maximizes f from x0 with initial simplex edge `step`. Restarts the simplex
/// around the incumbent while restarts still improve by more than `tolerance`.
/// The returned value is never below f(x0).
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &f,
                                      std::vector<double> x0, double step, int max_evaluations, double tolerance);

struct KetSearchResult {
    double value = 0;
    /// First nonzero amplitude real and nonnegative.
    Ket probe;
    int evaluations = 0;
    /// Set when the objective returned NaN or infinity; the search stopped there.
    bool aborted = false;
};

using KetObjective = std::function<double(const Ket &)>;

/// Number of real parameters of a unit ket in C^dim with the global phase removed.
size_t ket_parameter_count(size_t dim);
/// Hyperspherical angles (dim - 1) followed by relative phases (dim - 1).
Ket ket_from_parameters(size_t dim, std::span<const double> x);
/// Inverse of ket_from_parameters up to global phase.
std::vector<double> ket_parameters(const Ket &ket);

/// Coarse grid (regular Bloch grid for qubits, quasi-random otherwise) plus
/// the basis kets and `seeds`, then Nelder-Mead from the best `starts` candidates
/// (at most 8 grid cells; seeds are always refined). The search stops early
/// once a value within 1e-9 of `ceiling` is found.
KetSearchResult maximize_over_single_kets(const KetObjective &objective, size_t dim, const SearchBudget &budget,
                                          std::span<const Ket> seeds = {},
                                          double ceiling = std::numeric_limits<double>::infinity());

/// Pure probes on C^d (x) C^d. Adds the maximally entangled state and a family
/// of Schmidt-form states sqrt(p)|eta>|0> + sqrt(1-p)|eta_perp>|1> as dedicated starts.
KetSearchResult maximize_over_bipartite_kets(const KetObjective &objective, size_t d, const SearchBudget &budget,
                                             std::span<const Ket> seeds = {},
                                             double ceiling = std::numeric_limits<double>::infinity());

struct PovmSearchResult {
    double value = 0;
    std::vector<Matrix> povm;
    int evaluations = 0;
    bool aborted = false;
};

using PovmObjective = std::function<double(std::span<const Matrix>)>;

/// Square-root measurement of the weighted states sigma_k (unnormalized), with
/// the kernel of sum sigma_k assigned to outcome 0.
std::vector<Matrix> square_root_measurement(std::span<const Matrix> weighted_states);

/// Gradient ascent over isometries V (dim*outcomes x dim), M_k = V_k^dag V_k,
/// with finite-difference gradients and backtracking. Starts from the
/// square-root measurement of `srm_states` when given, then random isometries.
PovmSearchResult maximize_over_povms(const PovmObjective &objective, size_t dim, size_t outcomes,
                                     const SearchBudget &budget, std::span<const Matrix> srm_states = {});

}  // namespace povm_discrim

#endif
