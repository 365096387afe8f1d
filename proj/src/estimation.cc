// Copyright 2026 The Unsharp Authors
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


#include "unsharp/estimation.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace unsharp {

void NoiseChannels::validate() const {
    if (dephasing) {
        dephasing->validate();
    }
    mapping.validate();
    emission.validate();
}

void EstimationConfig::validate() const {
    if (!(p0 >= 0.0 && p0 <= 0.5)) {
        throw std::invalid_argument("p0 must lie in [0, 0.5]");
    }
    if (measurements_per_period < 1) {
        throw std::invalid_argument("measurements_per_period must be >= 1");
    }
    if (!(rabi_period > 0.0) || !std::isfinite(rabi_period)) {
        throw std::invalid_argument("rabi_period must be finite and > 0");
    }
    if (!(measurement_duration > 0.0)) {
        throw std::invalid_argument("measurement_duration must be > 0");
    }
    if (n_trajectories < 1) {
        throw std::invalid_argument("n_trajectories must be >= 1");
    }
    if (duration_periods < 1) {
        throw std::invalid_argument("duration_periods must be >= 1");
    }
    if (transient_skip_periods < 0) {
        throw std::invalid_argument("transient_skip_periods must be >= 0");
    }
    noise.validate();
}

namespace {

// Bayesian update of the estimate. When the reported outcome is impossible
// under the current estimate (only reachable with projective operators and a
// flipped report), the estimate restarts from the uninformed state.
QubitState update_estimate(const QubitState &estimate, const SymmetricPovm &povm, Outcome reported) {
    if (outcome_probability(estimate, povm, reported) >= kMinOutcomeProbability) {
        return apply_measurement(estimate, povm, reported).state;
    }
    double h = std::sqrt(0.5);
    return apply_measurement(QubitState(h, h), povm, reported).state;
}

}  // namespace

TrajectoryRecord run_estimation_trajectory(const EstimationConfig &cfg, Rng &rng, bool record_steps) {
    cfg.validate();
    SymmetricPovm povm = build_symmetric_povm(cfg.p0, MeasurementAxis::z());
    double rabi = rabi_frequency(cfg.rabi_period, cfg.rabi_convention);
    double dt = cfg.epoch_spacing();
    Mat2 known = rabi_propagator(rabi, dt);
    DephasingProcess dephasing(cfg.noise.dephasing.value_or(DephasingConfig{0.0, DephasingModel::kQuasiStatic, dt}),
                               rng);

    long long skip = static_cast<long long>(cfg.transient_skip_periods) * cfg.measurements_per_period;
    long long total = skip + static_cast<long long>(cfg.duration_periods) * cfg.measurements_per_period;

    QubitState truth = QubitState::ground();
    double h = std::sqrt(0.5);
    QubitState estimate(h, h);
    TrajectoryRecord rec;
    double sum = 0.0;
    long long averaged = 0;
    for (long long k = 1; k <= total; k++) {
        truth = dephasing.evolve(truth, rabi, dt, rng);
        estimate = estimate.evolved(known);
        CollapseResult c = spontaneous_collapse(truth, cfg.noise.emission, rng);
        truth = c.state;
        Outcome o = sample_outcome(truth, povm, rng);
        truth = apply_measurement(truth, povm, o).state;
        Outcome reported = flip_outcome(o, cfg.noise.mapping, rng);
        estimate = update_estimate(estimate, povm, reported);
        double f = fidelity(truth, estimate);
        if (k > skip) {
            sum += f;
            averaged++;
        }
        if (record_steps) {
            rec.steps.push_back(TrajectoryStep{static_cast<double>(k) * dt, StepKind::kUnsharp, truth, estimate, o,
                                               reported, c.collapsed, f});
        }
    }
    rec.mean_fidelity = sum / static_cast<double>(averaged);
    rec.count = total;
    rec.count_unsharp = total;
    return rec;
}

double expected_collapse_measurements(double p0) {
    if (!(p0 >= 0.0 && p0 <= 0.5)) {
        throw std::invalid_argument("p0 must lie in [0, 0.5]");
    }
    if (p0 == 0.5) {
        return std::numeric_limits<double>::infinity();
    }
    double bound = std::log(99.0);
    if (p0 == 0.0) {
        return 1.0;
    }
    double step = std::log((1.0 - p0) / p0);
    if (step >= bound) {
        return 1.0;
    }
    // Interior nodes x = k * step with |x| < bound.
    auto half = static_cast<int>(std::ceil(bound / step)) - 1;
    while ((half + 1) * step < bound) {
        half++;
    }
    while (half > 0 && half * step >= bound) {
        half--;
    }
    int n = 2 * half + 1;
    // E_k - up_k E_{k+1} - down_k E_{k-1} = 1, solved with the Thomas algorithm.
    std::vector<double> sub(n), diag(n, 1.0), sup(n), rhs(n, 1.0);
    for (int i = 0; i < n; i++) {
        double x = (i - half) * step;
        double pg = 1.0 / (1.0 + std::exp(-x));
        double up = pg * (1.0 - p0) + (1.0 - pg) * p0;
        sup[i] = -up;
        sub[i] = -(1.0 - up);
    }
    for (int i = 1; i < n; i++) {
        double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    std::vector<double> e(n);
    e[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; i--) {
        e[i] = (rhs[i] - sup[i] * e[i + 1]) / diag[i];
    }
    return e[half];
}

TimescaleReport check_timescales(const EstimationConfig &cfg) {
    cfg.validate();
    TimescaleReport r{};
    r.tau_meas = cfg.measurement_duration;
    r.tau_r = cfg.rabi_period;
    r.tau_m = expected_collapse_measurements(cfg.p0) * cfg.epoch_spacing();
    double delta_beta = cfg.noise.dephasing ? cfg.noise.dephasing->delta_beta : 0.0;
    r.tau_n = delta_beta > 0 ? 1.0 / (std::numbers::sqrt2 * delta_beta) : std::numeric_limits<double>::infinity();
    if (!(r.tau_meas < r.tau_r)) {
        r.warnings.push_back("measurement duration is not shorter than the Rabi period");
    }
    if (!(r.tau_r < r.tau_m)) {
        r.warnings.push_back("measurement-induced collapse time is not longer than the Rabi period");
    }
    if (!(r.tau_m < r.tau_n)) {
        r.warnings.push_back("collapse time is not shorter than the dephasing time");
    }
    r.ordered = r.warnings.empty();
    return r;
}

}  // namespace unsharp
