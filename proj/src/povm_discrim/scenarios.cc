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

#include "povm_discrim/scenarios.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "povm_discrim/ensembles.h"
#include "povm_discrim/errors.h"
#include "povm_discrim/zoo.h"

namespace povm_discrim {

Scenario Scenario::parse(std::string_view name) {
    for (const auto &s : all_scenarios()) {
        if (s.name() == name) {
            return s;
        }
    }
    throw ValidationError("unknown scenario '" + std::string(name) +
                          "'; expected one of dms, ams, dme, ame, dbarms, abarms, dbarme, abarme");
}

std::string Scenario::name() const {
    std::string out = task == Task::distinguish ? "d" : "a";
    if (post_access) {
        out += "bar";
    }
    out += "m";
    out += probe == ProbeKind::single ? "s" : "e";
    return out;
}

Scenario Scenario::with_task(Task t) const {
    Scenario s = *this;
    s.task = t;
    return s;
}

std::vector<Scenario> all_scenarios() {
    std::vector<Scenario> out;
    for (bool post : {false, true}) {
        for (ProbeKind probe : {ProbeKind::single, ProbeKind::entangled}) {
            for (Task task : {Task::distinguish, Task::antidistinguish}) {
                out.push_back({probe, post, task});
            }
        }
    }
    return out;
}

std::string method_name(Method m) {
    return m == Method::closed_form ? "closed_form" : "certified_numeric";
}

namespace {

constexpr double kPerfectSlack = tol::kPerfect;

void require_probe(const MeasurementSet &set, const Scenario &scenario, size_t probe_dim) {
    size_t d = set.dim();
    if (scenario.probe == ProbeKind::single) {
        if (probe_dim != d) {
            throw ValidationError("probe dimension " + std::to_string(probe_dim) + " does not match measurement dimension " +
                                  std::to_string(d));
        }
    } else if (probe_dim % d != 0 || probe_dim < d) {
        throw ValidationError("entangled probe dimension " + std::to_string(probe_dim) + " is not a multiple of " +
                              std::to_string(d));
    }
}

/// p_x Tr(rho M_a|x) table; absent outcomes are 0.
std::vector<std::vector<double>> outcome_table(const MeasurementSet &set, const Matrix &rho) {
    std::vector<std::vector<double>> table(set.outcomes(), std::vector<double>(set.size(), 0.0));
    for (size_t x = 0; x < set.size(); x++) {
        const auto &m = set.measurement(x);
        for (size_t a = 0; a < m.outcomes(); a++) {
            table[a][x] = set.prior(x) * trace_product(rho, m.povm_element(a));
        }
    }
    return table;
}

/// Unnormalized conditional states p_x p(a|x) rho_a|x for every (a, x).
struct ConditionalStates {
    // states[a][x], weights[a][x]; weight <= kZeroProbability means absent.
    std::vector<std::vector<Matrix>> states;
    std::vector<std::vector<double>> weights;
};

ConditionalStates conditional_states(const MeasurementSet &set, const Scenario &scenario, const Matrix &rho) {
    size_t d = set.dim();
    size_t db = rho.dim() / d;
    ConditionalStates out;
    out.states.assign(set.outcomes(), std::vector<Matrix>(set.size(), Matrix(1)));
    out.weights.assign(set.outcomes(), std::vector<double>(set.size(), 0.0));
    Matrix id_b = Matrix::identity(db);
    for (size_t x = 0; x < set.size(); x++) {
        const auto &m = set.measurement(x);
        for (size_t a = 0; a < m.outcomes(); a++) {
            Matrix f = scenario.probe == ProbeKind::single ? m.kraus(a) : tensor(m.kraus(a), id_b);
            Matrix sigma = (f * rho * f.adjoint()).hermitian_part();
            if (scenario.probe == ProbeKind::entangled && !scenario.post_access) {
                sigma = partial_trace_a(sigma, d, db).hermitian_part();
            }
            double w = sigma.trace().real();
            out.weights[a][x] = set.prior(x) * std::max(w, 0.0);
            if (w > tol::kZeroProbability) {
                out.states[a][x] = sigma * (1 / w);
            }
        }
    }
    return out;
}

struct OutcomeTerm {
    bool occurs = false;
    double value = 0;
    double upper = 0;
    double total = 0;
    double gap = 0;
    bool closed = true;
    std::vector<Matrix> povm;
};

OutcomeTerm solve_outcome(const ConditionalStates &cs, size_t a, Task task, size_t labels) {
    OutcomeTerm term;
    size_t dim = 0;
    for (size_t x = 0; x < labels; x++) {
        if (cs.weights[a][x] > tol::kZeroProbability) {
            dim = cs.states[a][x].dim();
        }
    }
    if (dim == 0) {
        return term;
    }
    std::vector<Matrix> states;
    std::vector<double> weights;
    for (size_t x = 0; x < labels; x++) {
        bool present = cs.weights[a][x] > tol::kZeroProbability;
        // Absent members keep their label; the ensemble drops them.
        states.push_back(present ? cs.states[a][x] : Matrix::identity(dim) * (1.0 / dim));
        weights.push_back(present ? cs.weights[a][x] : 0.0);
    }
    term.occurs = true;
    WeightedEnsemble ensemble(std::move(states), std::move(weights), labels);
    term.total = ensemble.total_weight();
    EnsembleSolution sol = task == Task::distinguish ? ds_general(ensemble) : as_general(ensemble);
    term.value = sol.value;
    term.upper = sol.certificate.dual_upper_bound;
    term.gap = sol.certificate.gap;
    term.closed = sol.certificate.closed();
    term.povm = std::move(sol.povm);
    return term;
}

Ket lift_probe(const Ket &probe, size_t target_dim) {
    if (probe.dim() == target_dim) {
        return probe;
    }
    if (target_dim % probe.dim() != 0) {
        throw ValidationError("cannot lift probe of dimension " + std::to_string(probe.dim()) + " to " +
                              std::to_string(target_dim));
    }
    return tensor(probe, Ket::basis(target_dim / probe.dim(), 0));
}

}  // namespace

double eval_dms(const MeasurementSet &set, const Matrix &rho) {
    if (rho.dim() != set.dim()) {
        throw ValidationError("eval_dms: probe dimension mismatch");
    }
    double total = 0;
    for (const auto &row : outcome_table(set, rho)) {
        total += *std::max_element(row.begin(), row.end());
    }
    return total;
}

double eval_ams(const MeasurementSet &set, const Matrix &rho) {
    if (rho.dim() != set.dim()) {
        throw ValidationError("eval_ams: probe dimension mismatch");
    }
    double total = 0;
    for (const auto &row : outcome_table(set, rho)) {
        total += *std::min_element(row.begin(), row.end());
    }
    return 1 - total;
}

double eval_scenario(const MeasurementSet &set, const Scenario &scenario, const Matrix &probe) {
    require_probe(set, scenario, probe.dim());
    if (scenario.probe == ProbeKind::single && !scenario.post_access) {
        return scenario.task == Task::distinguish ? eval_dms(set, probe) : eval_ams(set, probe);
    }
    auto cs = conditional_states(set, scenario, probe);
    double total = 0;
    for (size_t a = 0; a < set.outcomes(); a++) {
        total += solve_outcome(cs, a, scenario.task, set.size()).value;
    }
    return total;
}

double eval_scenario(const MeasurementSet &set, const Scenario &scenario, const Ket &probe) {
    return eval_scenario(set, scenario, probe.projector());
}

DiscrimResult evaluate_at(const MeasurementSet &set, const Scenario &scenario, const Ket &probe) {
    require_probe(set, scenario, probe.dim());
    DiscrimResult r;
    r.scenario = scenario;
    r.probe = probe.with_canonical_phase();
    r.evaluations = 1;
    Matrix rho = probe.projector();
    if (scenario.probe == ProbeKind::single && !scenario.post_access) {
        r.value = scenario.task == Task::distinguish ? eval_dms(set, rho) : eval_ams(set, rho);
        r.lower = r.upper = r.value;
        r.method = Method::closed_form;
        return r;
    }
    auto cs = conditional_states(set, scenario, rho);
    for (size_t a = 0; a < set.outcomes(); a++) {
        OutcomeTerm term = solve_outcome(cs, a, scenario.task, set.size());
        r.value += term.value;
        r.upper += term.occurs ? term.upper : 0;
        r.max_gap = std::max(r.max_gap, term.gap);
        if (!term.closed) {
            std::ostringstream w;
            w << "outcome " << a + 1 << ": primal-dual gap " << term.gap << " not closed";
            r.warnings.push_back(w.str());
        }
        r.per_outcome_strategy.push_back(std::move(term.povm));
    }
    r.lower = r.value;
    r.method = Method::certified_numeric;
    return r;
}

DiscrimResult optimize_scenario(const MeasurementSet &set, const Scenario &scenario, const SearchBudget &budget,
                                const std::vector<DiscrimResult> &inherited) {
    size_t d = set.dim();
    size_t probe_dim = scenario.probe == ProbeKind::single ? d : d * d;
    std::vector<Ket> seeds;
    for (const auto &h : inherited) {
        if (h.scenario.task != scenario.task) {
            throw ValidationError("optimize_scenario: inherited result has a different task");
        }
        seeds.push_back(lift_probe(h.probe, probe_dim));
    }
    auto objective = [&](const Ket &k) { return eval_scenario(set, scenario, k); };
    KetSearchResult search = scenario.probe == ProbeKind::single
                                 ? maximize_over_single_kets(objective, d, budget, seeds, 1.0)
                                 : maximize_over_bipartite_kets(objective, d, budget, seeds, 1.0);
    DiscrimResult best = evaluate_at(set, scenario, search.probe);
    best.evaluations = search.evaluations;
    if (search.aborted) {
        best.warnings.push_back("probe search aborted: objective returned a non-finite value");
    }
    for (size_t i = 0; i < inherited.size(); i++) {
        if (inherited[i].value > best.value) {
            int evaluations = best.evaluations;
            best = evaluate_at(set, scenario, seeds[i]);
            best.evaluations = evaluations;
            best.value = std::max(best.value, inherited[i].value);
            best.lower = best.value;
            best.upper = std::max(best.upper, best.value);
            best.warnings.push_back("value inherited from " + inherited[i].scenario.name());
        }
    }
    if (best.value > 1 + tol::kCertificateSoundness) {
        best.warnings.push_back("value exceeds 1");
    }
    return best;
}

Hierarchy optimize_hierarchy(const MeasurementSet &set, Task task, const SearchBudget &budget) {
    Hierarchy h;
    h.ms = optimize_scenario(set, {ProbeKind::single, false, task}, budget);
    h.me = optimize_scenario(set, {ProbeKind::entangled, false, task}, budget, {h.ms});
    h.bar_ms = optimize_scenario(set, {ProbeKind::single, true, task}, budget, {h.ms});
    h.bar_me = optimize_scenario(set, {ProbeKind::entangled, true, task}, budget, {h.me, h.bar_ms});
    return h;
}

ProjectiveClosedForm closed_dms_ams_qubit_projective(const std::vector<Ket> &kets, const std::vector<double> &priors) {
    if (kets.size() != priors.size() || kets.empty()) {
        throw ValidationError("closed form: one prior per ket is needed");
    }
    for (const auto &k : kets) {
        if (k.dim() != 2) {
            throw ValidationError("closed form: kets must be qubits");
        }
    }
    ProjectiveClosedForm out;
    out.dms_single_branch = *std::max_element(priors.begin(), priors.end());
    out.ams_single_branch = *std::min_element(priors.begin(), priors.end());
    double pair_max = -1, pair_min = 2;
    for (size_t x = 0; x < kets.size(); x++) {
        for (size_t y = x + 1; y < kets.size(); y++) {
            double s = priors[x] + priors[y];
            double root = std::sqrt(std::max(0.0, s * s - 4 * priors[x] * priors[y] * std::norm(inner(kets[x], kets[y]))));
            pair_max = std::max(pair_max, 0.5 * (s + root));
            pair_min = std::min(pair_min, 0.5 * (s - root));
        }
    }
    if (kets.size() < 2) {
        out.dms = out.dms_single_branch;
        out.ams = 1 - out.ams_single_branch;
        return out;
    }
    if (pair_max < out.dms_single_branch - tol::kAlgebraic || pair_min > out.ams_single_branch + tol::kAlgebraic) {
        throw std::logic_error("closed form: single-measurement branch dominates the pairwise branch");
    }
    out.dms = std::max(pair_max, out.dms_single_branch);
    out.ams = 1 - std::min(pair_min, out.ams_single_branch);
    return out;
}

ProjectivePairClosedForm closed_dbarms_two_qubit_projective(const Ket &psi1, const Ket &psi2) {
    if (psi1.dim() != 2 || psi2.dim() != 2) {
        throw ValidationError("closed form: kets must be qubits");
    }
    ProjectivePairClosedForm out;
    double overlap2 = std::norm(inner(psi1, psi2));
    out.value = 0.5 + 0.5 * std::sqrt(std::max(0.0, 1 - overlap2 * overlap2));

    // Frame change U with U psi1 = |0> and U psi2 = cos(t/2)|0> + sin(t/2)|1>, t in [0, pi].
    Matrix u = unitary_mapping(psi1, Ket::basis(2, 0));
    auto image = mat_vec(u, psi2.amplitudes());
    Complex a = image[0], b = image[1];
    double theta = 2 * std::atan2(std::abs(b), std::abs(a));
    double phase_b = std::abs(b) > 0 ? std::arg(b) - (std::abs(a) > 0 ? std::arg(a) : 0.0) : 0.0;
    Matrix fix = Matrix::from_rows({{1, 0}, {0, std::polar(1.0, -phase_b)}});
    u = fix * u;

    out.alpha = M_PI / 2 - theta / 2;
    out.beta = M_PI;
    Ket in_frame({std::cos(out.alpha / 2), std::polar(std::sin(out.alpha / 2), out.beta)});
    out.probe = Ket::normalized(mat_vec(u.adjoint(), in_frame.amplitudes())).with_canonical_phase();
    return out;
}

PerfectCertificate perfect_posted_certificate(const MeasurementSet &set, const Ket &probe, Task task) {
    Scenario scenario{ProbeKind::single, true, task};
    require_probe(set, scenario, probe.dim());
    auto cs = conditional_states(set, scenario, probe.projector());
    PerfectCertificate out;
    out.perfect = true;
    for (size_t a = 0; a < set.outcomes(); a++) {
        OutcomeTerm term = solve_outcome(cs, a, task, set.size());
        OutcomeCertificate c;
        c.value = term.value;
        c.total = term.total;
        std::ostringstream reason;
        if (!term.occurs) {
            c.verdict = OutcomeVerdict::never_occurs;
            reason << "outcome " << a + 1 << " has probability 0 under every measurement";
        } else if (term.value >= term.total - kPerfectSlack) {
            c.verdict = OutcomeVerdict::perfect;
            reason << "outcome " << a + 1 << ": post-states perfectly "
                   << (task == Task::distinguish ? "distinguishable" : "antidistinguishable");
        } else {
            c.verdict = OutcomeVerdict::imperfect;
            out.perfect = false;
            reason.precision(9);
            reason << "outcome " << a + 1 << ": value " << term.value << " below total weight " << term.total;
        }
        c.reason = reason.str();
        out.outcomes.push_back(std::move(c));
    }
    return out;
}

}  // namespace povm_discrim
