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


#include "unsharp/preparation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxResetSteps = 1000;

QubitState psi0() {
    double h = std::sqrt(0.5);
    return QubitState(h, h);
}

double stage_distance(const QubitState &belief, int stage, const PreparationConfig &cfg) {
    BlochAngles a = bloch_angles(belief);
    if (stage == 0) {
        return std::abs(wrap_angle(a.phi - cfg.phi_target));
    }
    return std::abs(a.theta - cfg.theta_target);
}

}  // namespace

void PreparationConfig::validate() const {
    if (!(theta_target >= 0.0 && theta_target <= kPi)) {
        throw std::invalid_argument("theta_target must lie in [0, pi]");
    }
    if (!(phi_target >= 0.0 && phi_target < 2 * kPi)) {
        throw std::invalid_argument("phi_target must lie in [0, 2 pi)");
    }
    if (!(p0 >= 0.0 && p0 <= 0.5)) {
        throw std::invalid_argument("p0 must lie in [0, 0.5]");
    }
    if (!(tol_phi > 0.0) || !(tol_theta > 0.0)) {
        throw std::invalid_argument("tolerances must be > 0");
    }
    if (!(guard_band >= 0.0)) {
        throw std::invalid_argument("guard_band must be >= 0");
    }
    if (max_measurements < 1) {
        throw std::invalid_argument("max_measurements must be >= 1");
    }
    if (n_trajectories < 1) {
        throw std::invalid_argument("n_trajectories must be >= 1");
    }
    noise.validate();
}

ResetResult reset_to_psi0(const QubitState &state, Rng &rng) {
    auto [px_plus, px_minus] = projectors(MeasurementAxis::x());
    auto [py_plus, py_minus] = projectors(MeasurementAxis::y());
    QubitState s = state;
    for (int step = 1; step <= kMaxResetSteps; step++) {
        bool on_x = step % 2 == 1;
        const Mat2 &plus = on_x ? px_plus : py_plus;
        const Mat2 &minus = on_x ? px_minus : py_minus;
        double p_plus = std::clamp(s.expectation(plus).real(), 0.0, 1.0);
        bool got_plus = rng.uniform() < p_plus;
        if (on_x && got_plus) {
            return {psi0(), step};
        }
        s = apply_kraus(s, got_plus ? plus : minus).state;
    }
    throw std::runtime_error("reset_to_psi0: no +x outcome within 1000 projective measurements");
}

TrajectoryRecord run_preparation(const PreparationConfig &cfg, Rng &rng, bool record_steps) {
    cfg.validate();
    const SymmetricPovm povms[2] = {build_symmetric_povm(cfg.p0, MeasurementAxis::y()),
                                    build_symmetric_povm(cfg.p0, MeasurementAxis::z())};
    const double tols[2] = {cfg.tol_phi, cfg.tol_theta};
    QubitState target = state_from_angles(cfg.theta_target, cfg.phi_target);

    TrajectoryRecord rec;
    rec.converged = false;
    QubitState truth = psi0();
    QubitState belief = psi0();
    int stage = 0;

    auto do_reset = [&]() {
        ResetResult r = reset_to_psi0(truth, rng);
        truth = r.state;
        belief = psi0();
        rec.count += r.steps;
        rec.resets++;
        stage = 0;
        if (record_steps) {
            rec.steps.push_back(TrajectoryStep{static_cast<double>(rec.count), StepKind::kReset, truth, belief,
                                               Outcome::kZero, Outcome::kZero, false, fidelity(truth, target)});
        }
    };

    while (rec.count_unsharp < cfg.max_measurements) {
        double d = stage_distance(belief, stage, cfg);
        if (d < tols[stage]) {
            if (stage == 1) {
                rec.converged = true;
                break;
            }
            stage = 1;
            continue;
        }
        double entry = d;
        const SymmetricPovm &povm = povms[stage];
        while (rec.count_unsharp < cfg.max_measurements) {
            CollapseResult c = spontaneous_collapse(truth, cfg.noise.emission, rng);
            truth = c.state;
            Outcome o = sample_outcome(truth, povm, rng);
            truth = apply_measurement(truth, povm, o).state;
            Outcome reported = flip_outcome(o, cfg.noise.mapping, rng);
            rec.count++;
            rec.count_unsharp++;
            bool impossible = outcome_probability(belief, povm, reported) < kMinOutcomeProbability;
            if (!impossible) {
                belief = apply_measurement(belief, povm, reported).state;
            }
            if (record_steps) {
                rec.steps.push_back(TrajectoryStep{static_cast<double>(rec.count), StepKind::kUnsharp, truth, belief,
                                                   o, reported, c.collapsed, fidelity(truth, target)});
            }
            if (impossible) {
                do_reset();
                break;
            }
            d = stage_distance(belief, stage, cfg);
            if (d < tols[stage]) {
                break;
            }
            if (d > entry + cfg.guard_band * tols[stage]) {
                do_reset();
                break;
            }
        }
    }
    rec.mean_fidelity = fidelity(truth, target);
    return rec;
}

}  // namespace unsharp
