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

// povm_discrim command-line front end: discriminate, reproduce, sweep, validate.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "povm_discrim/errors.h"
#include "povm_discrim/measurement_io.h"
#include "povm_discrim/repro.h"
#include "povm_discrim/scenarios.h"

using namespace povm_discrim;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUncertified = 3;

struct BudgetFlags {
    std::string budget;
    std::optional<uint64_t> seed;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--budget", budget, "Search budget grid,starts,steps,tol (default from POVM_DISCRIM_BUDGET)");
        cmd->add_option("--seed", seed, "Seed for quasi-random grids and random starts");
    }

    SearchBudget resolve() const {
        SearchBudget b = budget.empty() ? SearchBudget::from_env() : SearchBudget::parse(budget);
        if (seed) {
            b.seed = *seed;
        }
        return b;
    }
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes to `path`, or stdout when empty.
void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write '" + path + "'");
    }
    out << text;
}

/// Parses a spec and reports every incomplete measurement before failing.
MeasurementSet load_set(const std::string &path) {
    SetSpec spec = parse_set_spec(read_input(path));
    bool ok = true;
    for (size_t x = 0; x < spec.measurements.size(); x++) {
        auto report = validate(spec.measurements[x]);
        if (!report.ok) {
            std::cerr << "measurement " << x + 1 << " (" << spec.measurements[x].name() << "): " << report.str()
                      << "\n";
            ok = false;
        }
    }
    if (!ok) {
        throw ValidationError("measurement set is invalid");
    }
    return spec.to_set();
}

/// "0.3", "pi/7", "-pi/3", "13pi/45", "2*pi", "pi/7+0.01".
double parse_angle(const std::string &text) {
    static const std::regex pi_form(
        R"(^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*(?:([+-])\s*(\d+(?:\.\d*)?|\.\d+))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        std::string coef = m[1].str();
        double c = coef.empty() || coef == "+" ? 1 : coef == "-" ? -1 : std::stod(coef);
        double d = m[2].matched ? std::stod(m[2].str()) : 1;
        double offset = m[4].matched ? std::stod(m[4].str()) * (m[3].str() == "-" ? -1 : 1) : 0;
        return c * M_PI / d + offset;
    }
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ValidationError("cannot parse angle '" + text + "'");
    }
    return v;
}

json complex_array(const Ket &k) {
    json out = json::array();
    for (size_t i = 0; i < k.dim(); i++) {
        out.push_back({k[i].real(), k[i].imag()});
    }
    return out;
}

bool certified(const DiscrimResult &r) {
    return std::isfinite(r.value) && r.max_gap <= tol::kCertificateGap;
}

json result_json(const DiscrimResult &r) {
    return {{"scenario", r.scenario.name()},
            {"value", r.value},
            {"bracket", {r.lower, r.upper}},
            {"probe", complex_array(r.probe)},
            {"method", method_name(r.method)},
            {"warnings", r.warnings},
            {"max_gap", r.max_gap},
            {"certified", certified(r)},
            {"evaluations", r.evaluations}};
}

int run_discriminate(const std::string &spec_path, const std::string &scenario_name, const std::string &task,
                     const BudgetFlags &flags, const std::string &out_path, bool allow_gap) {
    MeasurementSet set = load_set(spec_path);
    SearchBudget budget = flags.resolve();
    std::vector<Scenario> scenarios;
    if (scenario_name == "all") {
        scenarios = all_scenarios();
    } else {
        std::stringstream names(scenario_name);
        for (std::string name; std::getline(names, name, ',');) {
            scenarios.push_back(Scenario::parse(name));
        }
    }
    if (!task.empty()) {
        Task t = task == "distinguish" ? Task::distinguish : Task::antidistinguish;
        std::vector<Scenario> retasked;
        for (const auto &s : scenarios) {
            Scenario r = s.with_task(t);
            if (std::find(retasked.begin(), retasked.end(), r) == retasked.end()) {
                retasked.push_back(r);
            }
        }
        scenarios = retasked;
    }
    json results = json::array();
    bool all_certified = true;
    for (const auto &s : scenarios) {
        DiscrimResult r = optimize_scenario(set, s, budget);
        all_certified = all_certified && certified(r);
        results.push_back(result_json(r));
    }
    json doc = results.size() == 1 ? results[0] : results;
    emit(out_path, doc.dump(2) + "\n");
    if (!all_certified && !allow_gap) {
        std::cerr << "error: result not certified (primal-dual gap above " << tol::kCertificateGap
                  << "); pass --allow-gap to accept\n";
        return kExitUncertified;
    }
    return kExitOk;
}

int run_validate(const std::string &spec_path) {
    SetSpec spec = parse_set_spec(read_input(spec_path));
    bool ok = true;
    for (size_t x = 0; x < spec.measurements.size(); x++) {
        auto report = validate(spec.measurements[x]);
        std::cout << "measurement " << x + 1 << " (" << spec.measurements[x].name() << "): " << report.str() << "\n";
        ok = ok && report.ok;
    }
    if (!ok) {
        return kExitValidation;
    }
    auto set = spec.to_set();
    std::cout << "ok: " << set.size() << " measurements, dimension " << set.dim() << ", " << set.outcomes()
              << " outcomes\n";
    return kExitOk;
}

int run_reproduce(const std::string &id, const BudgetFlags &flags, const std::string &out_path, bool csv,
                  bool parallel) {
    SearchBudget budget = flags.resolve();
    std::vector<const ReproCase *> cases;
    for (const auto &c : repro_catalog()) {
        if (id == "all" || c.id == id) {
            cases.push_back(&c);
        }
    }
    if (cases.empty()) {
        std::cerr << "error: unknown case '" << id << "'; known ids:";
        for (const auto &known : repro_ids()) {
            std::cerr << " " << known;
        }
        std::cerr << " all\n";
        return kExitValidation;
    }
    std::vector<ReproOutcome> outcomes;
    if (parallel) {
        std::vector<std::future<ReproOutcome>> running;
        for (const auto *c : cases) {
            running.push_back(std::async(std::launch::async, [c, &budget] { return run_repro(*c, budget); }));
        }
        for (auto &f : running) {
            outcomes.push_back(f.get());
        }
    } else {
        for (const auto *c : cases) {
            outcomes.push_back(run_repro(*c, budget));
            if (!csv) {
                write_repro_text(std::cerr, {outcomes.back()});
            }
        }
    }
    std::ostringstream table;
    write_repro_csv(table, outcomes);
    if (!out_path.empty()) {
        emit(out_path, table.str());
    }
    if (csv) {
        std::cout << table.str();
    } else {
        write_repro_text(std::cout, outcomes);
    }
    bool pass = std::all_of(outcomes.begin(), outcomes.end(), [](const ReproOutcome &o) { return o.pass(); });
    return pass ? kExitOk : kExitFailed;
}

int run_sweep_cmd(const std::string &family, const std::string &start, const std::string &stop,
                  const std::string &step, const BudgetFlags &flags, const std::string &out_path, bool allow_gap) {
    auto rows = run_sweep(parse_sweep_family(family), parse_angle(start), parse_angle(stop), parse_angle(step),
                          flags.resolve());
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    emit(out_path, csv.str());
    bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.certified; });
    if (!ok && !allow_gap) {
        std::cerr << "error: some sweep points are not certified; pass --allow-gap to accept\n";
        return kExitUncertified;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-shot distinguishability and antidistinguishability of quantum measurements"};
    app.require_subcommand(1);

    std::string spec_path, scenario = "dms", task, out_path, case_id = "all";
    std::string family = "rat-reverse", start, stop, step = "pi/90";
    bool allow_gap = false, csv = false, parallel = false;
    BudgetFlags flags;

    auto *discriminate = app.add_subcommand("discriminate", "Optimize one or more scenarios for a measurement set");
    discriminate->add_option("spec", spec_path, "JSON measurement-set file, or - for stdin")->required();
    discriminate->add_option("--scenario", scenario, "dms, ams, dme, ame, dbarms, abarms, dbarme, abarme, a list, or all");
    discriminate->add_option("--task", task, "Override the task of the chosen scenarios")
        ->check(CLI::IsMember({"distinguish", "antidistinguish"}));
    discriminate->add_option("--out", out_path, "Write JSON here instead of stdout");
    discriminate->add_flag("--allow-gap", allow_gap, "Exit 0 even when a certificate gap stays open");
    flags.add_to(discriminate);

    auto *reproduce = app.add_subcommand("reproduce", "Run reproduction cases and print a pass/fail table");
    reproduce->add_option("case", case_id, "Case id or all");
    reproduce->add_option("--out", out_path, "Also write the CSV table here");
    reproduce->add_flag("--csv", csv, "Print CSV instead of text");
    reproduce->add_flag("--parallel", parallel, "Run cases concurrently");
    flags.add_to(reproduce);

    auto *sweep = app.add_subcommand("sweep", "DME with maximally entangled vs optimized probes over an angle range");
    sweep->add_option("--family", family, "rat-reverse or projective-pair");
    sweep->add_option("--start", start, "First angle (number or forms like pi/7, 13pi/45)")->required();
    sweep->add_option("--stop", stop, "Last angle")->required();
    sweep->add_option("--step", step, "Angle step");
    sweep->add_option("--out", out_path, "Write CSV here instead of stdout");
    sweep->add_flag("--allow-gap", allow_gap, "Exit 0 even when a certificate gap stays open");
    flags.add_to(sweep);

    auto *validate_cmd = app.add_subcommand("validate", "Check a measurement-set file");
    validate_cmd->add_option("spec", spec_path, "JSON measurement-set file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*discriminate) {
            return run_discriminate(spec_path, scenario, task, flags, out_path, allow_gap);
        }
        if (*reproduce) {
            return run_reproduce(case_id, flags, out_path, csv, parallel);
        }
        if (*sweep) {
            return run_sweep_cmd(family, start, stop, step, flags, out_path, allow_gap);
        }
        return run_validate(spec_path);
    } catch (const SpecParseError &e) {
        // The message already carries line and column when known.
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
