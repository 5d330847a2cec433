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

#ifndef POVM_DISCRIM_REPRO_H
#define POVM_DISCRIM_REPRO_H

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "povm_discrim/optimize.h"
#include "povm_discrim/scenarios.h"

namespace povm_discrim {

enum class Comparison {
    /// |computed - expected| <= tolerance
    near,
    /// computed >= expected - tolerance
    at_least,
    /// computed < expected
    below,
};

struct ReproCheck {
    std::string quantity;
    double computed = 0;
    double expected = 0;
    double tolerance = 0;
    Comparison comparison = Comparison::near;

    bool pass() const;
};

struct ReproOutcome {
    std::string id;
    std::string claim;
    std::vector<ReproCheck> checks;
    /// Set when the case threw; the case then fails.
    std::string error;
    double seconds = 0;

    bool pass() const;
};

struct ReproCase {
    std::string id;
    std::string claim;
    std::function<std::vector<ReproCheck>(const SearchBudget &)> run;
};

const std::vector<ReproCase> &repro_catalog();
std::vector<std::string> repro_ids();

/// Runs one case; exceptions are captured into ReproOutcome::error.
ReproOutcome run_repro(const ReproCase &c, const SearchBudget &budget);

/// id,quantity,computed,expected,comparison,tolerance,pass
void write_repro_csv(std::ostream &out, const std::vector<ReproOutcome> &outcomes);
void write_repro_text(std::ostream &out, const std::vector<ReproOutcome> &outcomes);

enum class SweepFamily {
    /// right_asym_trine(theta) vs reverse_trine, equal priors.
    right_asym_vs_reverse,
    /// {|0><0|, ...} vs {|phi(theta)><phi(theta)|, ...}, equal priors.
    projective_pair,
};

SweepFamily parse_sweep_family(const std::string &name);
std::string sweep_family_name(SweepFamily f);

struct SweepRow {
    double theta = 0;
    /// DME at the maximally entangled probe.
    double dme_maxent = 0;
    /// DME optimized over all probes, seeded with the maximally entangled
    /// probe and, for the trine family, the Schmidt ansatz below.
    double dme_general = 0;
    double gap = 0;
    bool certified = true;
};

/// Schmidt ansatz cos(x)|00> + sin(x)|11>, x = pi/4 - theta^2/8.
Ket schmidt_ansatz(double theta);

/// Throws DomainError when [start, stop] leaves the family's domain or the step is not positive.
std::vector<SweepRow> run_sweep(SweepFamily family, double start, double stop, double step,
                                const SearchBudget &budget);
/// theta,dme_maxent,dme_general,gap with LF endings and dot decimals.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

}  // namespace povm_discrim

#endif
