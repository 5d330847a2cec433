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

#ifndef POVM_DISCRIM_SCENARIOS_H
#define POVM_DISCRIM_SCENARIOS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "povm_discrim/measurements.h"
#include "povm_discrim/optimize.h"

namespace povm_discrim {

enum class Task { distinguish, antidistinguish };
enum class ProbeKind { single, entangled };

struct Scenario {
    ProbeKind probe = ProbeKind::single;
    /// Whether the post-measurement state is handed over.
    bool post_access = false;
    Task task = Task::distinguish;

    /// dms, ams, dme, ame, dbarms, abarms, dbarme, abarme. Throws ValidationError otherwise.
    static Scenario parse(std::string_view name);
    std::string name() const;
    /// The same scenario with the other task.
    Scenario with_task(Task t) const;

    bool operator==(const Scenario &) const = default;
};

/// All eight scenarios in the order dms, ams, dme, ame, dbarms, abarms, dbarme, abarme.
std::vector<Scenario> all_scenarios();

enum class Method { closed_form, certified_numeric };
std::string method_name(Method m);

struct DiscrimResult {
    Scenario scenario;
    double value = 0;
    /// Certified at the reported probe: lower is attained by the reported
    /// strategy, upper bounds every second-stage measurement for this probe.
    double lower = 0;
    double upper = 0;
    /// Single-system ket, or a ket on C^d (x) C^d for entangled scenarios.
    Ket probe;
    /// Bob's POVM {N_b|a}_b for each outcome a; empty for dms/ams.
    std::vector<std::vector<Matrix>> per_outcome_strategy;
    Method method = Method::certified_numeric;
    std::vector<std::string> warnings;
    /// Largest primal-dual gap over the per-outcome programs.
    double max_gap = 0;
    int evaluations = 0;
};

/// sum_a max_x p_x Tr(rho M_a|x); absent outcomes contribute 0.
double eval_dms(const MeasurementSet &set, const Matrix &rho);
/// 1 - sum_a min_x p_x Tr(rho M_a|x); absent outcomes make the minimum 0.
double eval_ams(const MeasurementSet &set, const Matrix &rho);

/// Value of any scenario at a fixed probe (density matrix on C^d, or on
/// C^d (x) C^dB for entangled scenarios).
double eval_scenario(const MeasurementSet &set, const Scenario &scenario, const Matrix &probe);
double eval_scenario(const MeasurementSet &set, const Scenario &scenario, const Ket &probe);

/// Full evaluation at a pure probe: value, bracket, strategies and gap warnings.
DiscrimResult evaluate_at(const MeasurementSet &set, const Scenario &scenario, const Ket &probe);

/// Maximizes over pure probes. `inherited` holds results of scenarios nested
/// below this one (same task): their probes seed the search, and their values
/// are kept when the search does not beat them, so the hierarchy holds exactly.
DiscrimResult optimize_scenario(const MeasurementSet &set, const Scenario &scenario, const SearchBudget &budget,
                                const std::vector<DiscrimResult> &inherited = {});

struct Hierarchy {
    DiscrimResult ms, me, bar_ms, bar_me;
};

/// The four scenarios of one task with warm-start nesting:
/// MS seeds ME and bar-MS, and both seed bar-ME.
Hierarchy optimize_hierarchy(const MeasurementSet &set, Task task, const SearchBudget &budget);

struct ProjectiveClosedForm {
    double dms = 0;
    double ams = 0;
    /// The single-measurement branches max_x p_x / min_x p_x, kept for the dominance check.
    double dms_single_branch = 0;
    double ams_single_branch = 0;
};

/// DMS and AMS of qubit projective measurements {|psi_x><psi_x|, complement}
/// from pairwise overlaps. Throws std::logic_error if the single-measurement
/// branch is ever the larger one.
ProjectiveClosedForm closed_dms_ams_qubit_projective(const std::vector<Ket> &kets, const std::vector<double> &priors);

struct ProjectivePairClosedForm {
    double value = 0;
    /// Probe Bloch angles in the frame where psi1 = |0>, psi2 = cos(t/2)|0> + sin(t/2)|1>.
    double alpha = 0;
    double beta = 0;
    /// The optimal probe mapped back to the original frame.
    Ket probe;
};

/// bar-DMS of two qubit projective measurements with equal priors.
ProjectivePairClosedForm closed_dbarms_two_qubit_projective(const Ket &psi1, const Ket &psi2);

enum class OutcomeVerdict { perfect, never_occurs, imperfect };

struct OutcomeCertificate {
    OutcomeVerdict verdict = OutcomeVerdict::imperfect;
    /// DS or AS of the outcome's post-state ensemble and its total weight.
    double value = 0;
    double total = 0;
    std::string reason;
};

struct PerfectCertificate {
    bool perfect = false;
    std::vector<OutcomeCertificate> outcomes;
};

/// Checks, outcome by outcome, whether a single probe makes bar-DMS (or
/// bar-AMS) equal to 1: each outcome's post-states are perfectly
/// (anti)distinguishable or the outcome never occurs.
PerfectCertificate perfect_posted_certificate(const MeasurementSet &set, const Ket &probe, Task task);

}  // namespace povm_discrim

#endif
