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

#include "povm_discrim/optimize.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "povm_discrim/errors.h"

namespace povm_discrim {

SearchBudget SearchBudget::parse(std::string_view text) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in{std::string(text)};
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (fields.size() != 4) {
        throw ValidationError("budget must have the form grid,starts,steps,tol; got '" + std::string(text) + "'");
    }
    SearchBudget b;
    try {
        b.grid = std::stoi(fields[0]);
        b.starts = std::stoi(fields[1]);
        b.max_steps = std::stoi(fields[2]);
        b.tolerance = std::stod(fields[3]);
    } catch (const std::exception &) {
        throw ValidationError("budget fields must be numbers; got '" + std::string(text) + "'");
    }
    if (b.grid <= 0 || b.starts <= 0 || b.max_steps <= 0 || !(b.tolerance > 0)) {
        throw ValidationError("budget fields must be positive; got '" + std::string(text) + "'");
    }
    return b;
}

SearchBudget SearchBudget::from_env() {
    const char *env = std::getenv("POVM_DISCRIM_BUDGET");
    if (env == nullptr || *env == '\0') {
        return {};
    }
    return parse(env);
}

std::string SearchBudget::str() const {
    std::ostringstream out;
    out << grid << "," << starts << "," << max_steps << "," << tolerance;
    return out.str();
}

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &f,
                                      std::vector<double> x0, double step, int max_evaluations, double tolerance) {
    const size_t n = x0.size();
    NelderMeadResult best;
    best.x = x0;
    best.value = f(x0);
    best.evaluations = 1;
    if (!std::isfinite(best.value)) {
        best.non_finite = true;
        return best;
    }
    if (n == 0) {
        return best;
    }

    auto eval = [&](const std::vector<double> &x) {
        double v = f(x);
        best.evaluations++;
        if (!std::isfinite(v)) {
            best.non_finite = true;
        } else if (v > best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    };

    double restart_from = best.value;
    while (best.evaluations < max_evaluations && !best.non_finite) {
        // Simplex around the incumbent; we minimize -f.
        std::vector<std::vector<double>> pts(n + 1, best.x);
        std::vector<double> fv(n + 1);
        fv[0] = -best.value;
        for (size_t i = 0; i < n; i++) {
            pts[i + 1][i] += step;
            fv[i + 1] = -eval(pts[i + 1]);
        }
        std::vector<size_t> order(n + 1);
        std::vector<double> centroid(n), xr(n), xe(n), xc(n);
        while (best.evaluations < max_evaluations && !best.non_finite) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
            size_t lo = order[0], hi = order[n], second = order[n - 1];
            double size = 0;
            for (size_t i = 0; i <= n; i++) {
                for (size_t k = 0; k < n; k++) {
                    size = std::max(size, std::abs(pts[i][k] - pts[lo][k]));
                }
            }
            if (fv[hi] - fv[lo] <= 1e-3 * tolerance && size <= 1e-2 * std::sqrt(tolerance)) {
                break;
            }
            if (size < 1e-12) {
                break;
            }
            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (size_t i = 0; i <= n; i++) {
                if (i != hi) {
                    for (size_t k = 0; k < n; k++) {
                        centroid[k] += pts[i][k] / n;
                    }
                }
            }
            for (size_t k = 0; k < n; k++) {
                xr[k] = centroid[k] + (centroid[k] - pts[hi][k]);
            }
            double fr = -eval(xr);
            if (fr < fv[lo]) {
                for (size_t k = 0; k < n; k++) {
                    xe[k] = centroid[k] + 2 * (centroid[k] - pts[hi][k]);
                }
                double fe = -eval(xe);
                if (fe < fr) {
                    pts[hi] = xe, fv[hi] = fe;
                } else {
                    pts[hi] = xr, fv[hi] = fr;
                }
                continue;
            }
            if (fr < fv[second]) {
                pts[hi] = xr, fv[hi] = fr;
                continue;
            }
            bool outside = fr < fv[hi];
            for (size_t k = 0; k < n; k++) {
                xc[k] = outside ? centroid[k] + 0.5 * (xr[k] - centroid[k])
                                : centroid[k] + 0.5 * (pts[hi][k] - centroid[k]);
            }
            double fc = -eval(xc);
            if (fc < (outside ? fr : fv[hi])) {
                pts[hi] = xc, fv[hi] = fc;
                continue;
            }
            for (size_t i = 0; i <= n; i++) {
                if (i == lo) {
                    continue;
                }
                for (size_t k = 0; k < n; k++) {
                    pts[i][k] = pts[lo][k] + 0.5 * (pts[i][k] - pts[lo][k]);
                }
                fv[i] = -eval(pts[i]);
            }
        }
        // Restart on stagnation; stop once a restart no longer pays.
        if (best.value - restart_from <= tolerance) {
            break;
        }
        restart_from = best.value;
    }
    return best;
}

size_t ket_parameter_count(size_t dim) {
    return 2 * (dim - 1);
}

Ket ket_from_parameters(size_t dim, std::span<const double> x) {
    if (x.size() != ket_parameter_count(dim)) {
        throw ValidationError("ket_from_parameters: expected " + std::to_string(ket_parameter_count(dim)) +
                              " parameters");
    }
    std::vector<Complex> amp(dim);
    double tail = 1;
    for (size_t k = 0; k + 1 < dim; k++) {
        amp[k] = tail * std::cos(x[k]);
        tail *= std::sin(x[k]);
    }
    amp[dim - 1] = tail;
    for (size_t k = 1; k < dim; k++) {
        amp[k] *= std::polar(1.0, x[dim - 2 + k]);
    }
    return Ket::normalized(std::move(amp));
}

std::vector<double> ket_parameters(const Ket &ket) {
    size_t dim = ket.dim();
    std::vector<double> x(ket_parameter_count(dim));
    double ref = std::abs(ket[0]) > 0 ? std::arg(ket[0]) : 0.0;
    for (size_t k = 0; k + 1 < dim; k++) {
        double rest = 0;
        for (size_t j = k + 1; j < dim; j++) {
            rest += std::norm(ket[j]);
        }
        x[k] = std::atan2(std::sqrt(rest), std::abs(ket[k]));
    }
    for (size_t k = 1; k < dim; k++) {
        x[dim - 2 + k] = std::arg(ket[k]) - ref;
    }
    return x;
}

namespace {

constexpr size_t kTopCells = 8;
const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

double radical_inverse(uint64_t i, int base) {
    double inv = 1.0 / base, f = inv, r = 0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

/// Quasi-random parameters: angles in [0, pi/2], phases in [0, 2 pi), with a
/// seed-dependent rotation of the Halton sequence.
std::vector<std::vector<double>> halton_parameters(size_t dim, size_t count, uint64_t seed) {
    size_t p = ket_parameter_count(dim);
    if (p > std::size(kPrimes)) {
        throw ValidationError("probe search: dimension too large");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<double> shift(p);
    for (auto &s : shift) {
        s = unit(rng);
    }
    std::vector<std::vector<double>> out(count, std::vector<double>(p));
    for (size_t i = 0; i < count; i++) {
        for (size_t k = 0; k < p; k++) {
            double u = std::fmod(radical_inverse(i + 1, kPrimes[k]) + shift[k], 1.0);
            out[i][k] = k < dim - 1 ? u * M_PI / 2 : u * 2 * M_PI;
        }
    }
    return out;
}

struct Candidate {
    std::vector<double> x;
    double value;
};

struct KetSearch {
    const KetObjective &objective;
    size_t dim;
    const SearchBudget &budget;
    KetSearchResult result;
    double ceiling;
    std::vector<double> best_x;
    bool have_best = false;

    bool done() const {
        return result.aborted || (have_best && result.value >= ceiling - tol::kCertificateSoundness);
    }

    double evaluate(std::span<const double> x) {
        result.evaluations++;
        double v = objective(ket_from_parameters(dim, x));
        if (!std::isfinite(v)) {
            result.aborted = true;
        }
        return v;
    }

    void offer(const std::vector<double> &x, double v) {
        if (std::isfinite(v) && (!have_best || v > result.value)) {
            result.value = v;
            best_x = x;
            have_best = true;
        }
    }

    void refine(const std::vector<double> &x0, double step) {
        if (done()) {
            return;
        }
        auto f = [this](std::span<const double> x) { return evaluate(x); };
        auto nm = nelder_mead_maximize(f, x0, step, budget.max_steps, budget.tolerance);
        offer(nm.x, nm.value);
        if (nm.non_finite) {
            result.aborted = true;
        }
    }

    /// Evaluates the candidates and refines seeds plus the best grid cells.
    KetSearchResult run(std::vector<std::vector<double>> grid, std::vector<std::vector<double>> seeds,
                        double grid_step) {
        std::vector<Candidate> seeded;
        for (auto &x : seeds) {
            double v = evaluate(x);
            if (result.aborted) {
                return finish();
            }
            offer(x, v);
            seeded.push_back({std::move(x), v});
            if (done()) {
                return finish();
            }
        }
        std::vector<Candidate> cells;
        for (auto &x : grid) {
            double v = evaluate(x);
            if (result.aborted) {
                return finish();
            }
            offer(x, v);
            cells.push_back({std::move(x), v});
            if (done()) {
                return finish();
            }
        }
        std::stable_sort(cells.begin(), cells.end(),
                         [](const Candidate &a, const Candidate &b) { return a.value > b.value; });
        size_t top = std::min({cells.size(), kTopCells, static_cast<size_t>(budget.starts)});
        for (const auto &c : seeded) {
            refine(c.x, grid_step);
        }
        for (size_t i = 0; i < top; i++) {
            refine(cells[i].x, grid_step);
        }
        // Remaining starts from pseudo-random points.
        size_t extra = static_cast<size_t>(budget.starts) > top ? budget.starts - top : 0;
        if (extra > 0) {
            std::mt19937_64 rng(budget.seed ^ 0x9e3779b97f4a7c15ULL);
            std::uniform_real_distribution<double> unit(0, 1);
            size_t p = ket_parameter_count(dim);
            for (size_t s = 0; s < extra && !done(); s++) {
                std::vector<double> x(p);
                for (size_t k = 0; k < p; k++) {
                    x[k] = k < dim - 1 ? unit(rng) * M_PI / 2 : unit(rng) * 2 * M_PI;
                }
                refine(x, 0.3);
            }
        }
        return finish();
    }

    KetSearchResult finish() {
        if (have_best) {
            result.probe = ket_from_parameters(dim, best_x).with_canonical_phase();
        } else {
            result.probe = Ket::basis(dim, 0);
            result.value = std::nan("");
        }
        return result;
    }
};

}  // namespace

KetSearchResult maximize_over_single_kets(const KetObjective &objective, size_t dim, const SearchBudget &budget,
                                          std::span<const Ket> seeds, double ceiling) {
    if (dim == 0) {
        throw ValidationError("probe search: dimension must be positive");
    }
    if (dim == 1) {
        KetSearchResult r;
        r.probe = Ket::basis(1, 0);
        r.value = objective(r.probe);
        r.evaluations = 1;
        r.aborted = !std::isfinite(r.value);
        return r;
    }
    KetSearch search{objective, dim, budget, {}, ceiling, {}, false};
    std::vector<std::vector<double>> seed_x;
    for (const auto &k : seeds) {
        if (k.dim() != dim) {
            throw ValidationError("probe search: seed has the wrong dimension");
        }
        seed_x.push_back(ket_parameters(k));
    }
    std::vector<std::vector<double>> grid;
    for (size_t i = 0; i < dim; i++) {
        grid.push_back(ket_parameters(Ket::basis(dim, i)));
    }
    size_t g = static_cast<size_t>(budget.grid);
    if (dim == 2) {
        // Polar angle theta/2 in [0, pi/2] including both poles; azimuth in [0, 2 pi).
        for (size_t i = 1; i < g; i++) {
            for (size_t j = 0; j < g; j++) {
                grid.push_back({M_PI / 2 * i / g, 2 * M_PI * j / g});
            }
        }
    } else {
        auto h = halton_parameters(dim, g * g, budget.seed);
        grid.insert(grid.end(), h.begin(), h.end());
    }
    return search.run(std::move(grid), std::move(seed_x), std::max(M_PI / g, 0.02));
}

KetSearchResult maximize_over_bipartite_kets(const KetObjective &objective, size_t d, const SearchBudget &budget,
                                             std::span<const Ket> seeds, double ceiling) {
    if (d < 2) {
        throw ValidationError("bipartite probe search needs d >= 2");
    }
    size_t dim = d * d;
    KetSearch search{objective, dim, budget, {}, ceiling, {}, false};
    std::vector<std::vector<double>> seed_x;
    for (const auto &k : seeds) {
        if (k.dim() != dim) {
            throw ValidationError("probe search: seed has the wrong dimension");
        }
        seed_x.push_back(ket_parameters(k));
    }
    // Maximally entangled state, always refined.
    std::vector<Complex> maxent(dim);
    for (size_t i = 0; i < d; i++) {
        maxent[i * d + i] = 1 / std::sqrt(static_cast<double>(d));
    }
    seed_x.push_back(ket_parameters(Ket(maxent)));

    std::vector<std::vector<double>> grid;
    const double weights[] = {0.5, 0.6, 0.7, 0.8, 0.88, 0.95, 1.0};
    if (d == 2) {
        size_t g = std::max<size_t>(2, static_cast<size_t>(budget.grid) / 8);
        for (double p : weights) {
            for (size_t i = 0; i <= g; i++) {
                for (size_t j = 0; j < (i == 0 || i == g ? 1 : g); j++) {
                    double theta = M_PI * i / g, phi = 2 * M_PI * j / g;
                    Ket eta({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
                    Ket perp = eta.qubit_perp();
                    std::vector<Complex> amp(4);
                    for (size_t a = 0; a < 2; a++) {
                        amp[a * 2 + 0] = std::sqrt(p) * eta[a];
                        amp[a * 2 + 1] = std::sqrt(1 - p) * perp[a];
                    }
                    grid.push_back(ket_parameters(Ket::normalized(amp)));
                }
            }
        }
    } else {
        for (double p : weights) {
            std::vector<Complex> amp(dim);
            amp[0] = std::sqrt(p);
            for (size_t i = 1; i < d; i++) {
                amp[i * d + i] = std::sqrt((1 - p) / (d - 1));
            }
            grid.push_back(ket_parameters(Ket::normalized(amp)));
        }
    }
    size_t g = static_cast<size_t>(budget.grid);
    auto h = halton_parameters(dim, g * g, budget.seed);
    grid.insert(grid.end(), h.begin(), h.end());
    return search.run(std::move(grid), std::move(seed_x), std::max(M_PI / g, 0.02));
}

std::vector<Matrix> square_root_measurement(std::span<const Matrix> weighted_states) {
    if (weighted_states.empty()) {
        throw ValidationError("square_root_measurement: no states");
    }
    size_t d = weighted_states[0].dim();
    Matrix total(d);
    for (const auto &s : weighted_states) {
        total += s;
    }
    auto eig = herm_eigs(total.hermitian_part());
    double cutoff = tol::kAlgebraic * std::max(1.0, eig.values.back());
    Matrix inv_sqrt = spectral_map(eig, [&](double l) { return l > cutoff ? 1 / std::sqrt(l) : 0.0; });
    Matrix kernel = spectral_map(eig, [&](double l) { return l > cutoff ? 0.0 : 1.0; });
    std::vector<Matrix> povm;
    for (const auto &s : weighted_states) {
        povm.push_back((inv_sqrt * s * inv_sqrt).hermitian_part());
    }
    povm[0] += kernel;
    return povm;
}

namespace {

/// Real parameters of A (dim*outcomes x dim) -> POVM M_k = V_k^dag V_k with V = A (A^dag A)^{-1/2}.
std::vector<Matrix> povm_from_parameters(std::span<const double> x, size_t dim, size_t outcomes) {
    size_t rows = dim * outcomes;
    auto entry = [&](size_t r, size_t c) { return Complex(x[2 * (r * dim + c)], x[2 * (r * dim + c) + 1]); };
    Matrix gram(dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            Complex s = 0;
            for (size_t r = 0; r < rows; r++) {
                s += std::conj(entry(r, i)) * entry(r, j);
            }
            gram(i, j) = s;
        }
    }
    Matrix inv_sqrt = spectral_map(herm_eigs(gram.hermitian_part()),
                                   [](double l) { return l > 1e-300 ? 1 / std::sqrt(l) : 0.0; });
    std::vector<Matrix> povm;
    for (size_t k = 0; k < outcomes; k++) {
        Matrix block(dim);
        for (size_t i = 0; i < dim; i++) {
            for (size_t j = 0; j < dim; j++) {
                block(i, j) = entry(k * dim + i, j);
            }
        }
        Matrix v = block * inv_sqrt;
        povm.push_back((v.adjoint() * v).hermitian_part());
    }
    return povm;
}

std::vector<double> parameters_from_povm(std::span<const Matrix> povm) {
    size_t dim = povm[0].dim();
    std::vector<double> x;
    for (const auto &m : povm) {
        Matrix root = spectral_map(herm_eigs(m.hermitian_part()), [](double l) { return std::sqrt(std::max(l, 0.0)); });
        for (size_t i = 0; i < dim; i++) {
            for (size_t j = 0; j < dim; j++) {
                x.push_back(root(i, j).real());
                x.push_back(root(i, j).imag());
            }
        }
    }
    return x;
}

}  // namespace

PovmSearchResult maximize_over_povms(const PovmObjective &objective, size_t dim, size_t outcomes,
                                     const SearchBudget &budget, std::span<const Matrix> srm_states) {
    if (dim == 0 || outcomes == 0) {
        throw ValidationError("povm search: dimension and outcome count must be positive");
    }
    PovmSearchResult result;
    result.value = -std::numeric_limits<double>::infinity();
    auto f = [&](std::span<const double> x) {
        result.evaluations++;
        double v = objective(povm_from_parameters(x, dim, outcomes));
        if (!std::isfinite(v)) {
            result.aborted = true;
        }
        return v;
    };

    std::vector<std::vector<double>> starts;
    if (!srm_states.empty()) {
        if (srm_states.size() != outcomes) {
            throw ValidationError("povm search: one state per outcome is needed for the square-root start");
        }
        starts.push_back(parameters_from_povm(square_root_measurement(srm_states)));
    }
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> normal;
    size_t p = 2 * dim * dim * outcomes;
    while (starts.size() < static_cast<size_t>(budget.starts)) {
        std::vector<double> x(p);
        for (auto &v : x) {
            v = normal(rng);
        }
        starts.push_back(std::move(x));
    }

    const double h = 1e-6;
    for (auto &x : starts) {
        double fx = f(x);
        double eta = 0.1;
        int quiet = 0;
        std::vector<double> grad(p), trial(p);
        for (int step = 0; step < budget.max_steps && !result.aborted; step++) {
            double norm2 = 0;
            for (size_t k = 0; k < p; k++) {
                double keep = x[k];
                x[k] = keep + h;
                double up = f(x);
                x[k] = keep - h;
                double down = f(x);
                x[k] = keep;
                grad[k] = (up - down) / (2 * h);
                norm2 += grad[k] * grad[k];
            }
            if (norm2 < 1e-24) {
                break;
            }
            double gain = 0;
            eta = std::min(eta * 2, 10.0);
            while (eta > 1e-14) {
                for (size_t k = 0; k < p; k++) {
                    trial[k] = x[k] + eta * grad[k];
                }
                double ft = f(trial);
                if (ft >= fx + 1e-4 * eta * norm2) {
                    gain = ft - fx;
                    x.swap(trial);
                    fx = ft;
                    break;
                }
                eta *= 0.5;
            }
            quiet = gain < 1e-3 * budget.tolerance ? quiet + 1 : 0;
            if (eta <= 1e-14 || quiet >= 5) {
                break;
            }
        }
        if (std::isfinite(fx) && fx > result.value) {
            result.value = fx;
            result.povm = povm_from_parameters(x, dim, outcomes);
        }
        if (result.aborted) {
            break;
        }
    }
    return result;
}

}  // namespace povm_discrim
