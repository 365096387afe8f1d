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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "unsharp/sweep.h"

using namespace unsharp;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = std::sqrt(0.5);

double mean_reset_steps(const QubitState &in, int runs, uint64_t seed) {
    Rng rng(seed);
    long long total = 0;
    for (int k = 0; k < runs; k++) {
        ResetResult r = reset_to_psi0(in, rng);
        EXPECT_NEAR(fidelity(r.state, QubitState(kH, kH)), 1.0, 1e-9);
        total += r.steps;
    }
    return total / double(runs);
}

// Expected step counts of the alternating x/y reset, from the Markov chain on
// {+-x, +-y}: with a = E[steps | state -x, next y] and b = E[steps | state +-y,
// next x], a = 1 + b and b = 1 + a/2.
struct ResetOracle {
    double a = 4.0;
    double b = 3.0;
    // An input with +x probability q, measured along x first.
    double from(double q) const {
        return 1 + (1 - q) * a;
    }
};

}  // namespace

TEST(ResetToPsi0, MarkovChainOracle) {
    ResetOracle o;
    EXPECT_DOUBLE_EQ(o.a, 1 + o.b);
    EXPECT_DOUBLE_EQ(o.b, 1 + o.a / 2);
    Rng rng(1);
    for (int k = 0; k < 100; k++) {
        EXPECT_EQ(reset_to_psi0(QubitState(kH, kH), rng).steps, 1);
    }
    const int runs = 10000;
    // Step counts are geometric-like with variance below 20, so 3 sigma is about 0.15.
    EXPECT_NEAR(mean_reset_steps(QubitState::ground(), runs, 2), o.from(0.5), 0.15);
    EXPECT_NEAR(mean_reset_steps(QubitState(kH, -kH), runs, 3), o.from(0.0), 0.15);
    EXPECT_NEAR(mean_reset_steps(QubitState(kH, Complex(0, kH)), runs, 4), o.from(0.5), 0.15);
}

TEST(PreparationConfig, Validation) {
    PreparationConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.theta_target = 4.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = PreparationConfig{};
    cfg.phi_target = 2 * kPi;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = PreparationConfig{};
    cfg.tol_phi = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = PreparationConfig{};
    cfg.max_measurements = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(RunPreparation, NoiselessBaseline) {
    PreparationConfig cfg;
    const int n = 400;
    double fid = 0;
    double count = 0;
    for (int t = 0; t < n; t++) {
        Rng rng(derive_seed(10, kPreparationStream, t));
        TrajectoryRecord r = run_preparation(cfg, rng);
        EXPECT_TRUE(r.converged);
        // Every reset costs at least one projective measurement.
        EXPECT_GE(r.count - r.count_unsharp, r.resets);
        fid += r.mean_fidelity / n;
        count += double(r.count) / n;
    }
    EXPECT_GE(fid, 0.99);
    EXPECT_GE(count, 15.0);
    EXPECT_LE(count, 29.0);
}

TEST(RunPreparation, ConvergedAnglesWithinTolerance) {
    PreparationConfig cfg;
    for (int t = 0; t < 200; t++) {
        Rng rng(derive_seed(11, kPreparationStream, t));
        TrajectoryRecord r = run_preparation(cfg, rng, true);
        ASSERT_TRUE(r.converged);
        ASSERT_FALSE(r.steps.empty());
        BlochAngles a = bloch_angles(r.steps.back().true_state);
        EXPECT_LE(std::abs(wrap_angle(a.phi - cfg.phi_target)), cfg.tol_phi);
        EXPECT_LE(std::abs(a.theta - cfg.theta_target), cfg.tol_theta);
        EXPECT_EQ(r.steps.back().true_state, r.steps.back().estimate);
    }
}

TEST(RunPreparation, TargetAtStartingStateNeedsAtMostTwoMeasurements) {
    PreparationConfig cfg;
    cfg.theta_target = kPi / 2;
    cfg.phi_target = 0.0;
    for (int t = 0; t < 100; t++) {
        Rng rng(t);
        TrajectoryRecord r = run_preparation(cfg, rng);
        EXPECT_TRUE(r.converged);
        EXPECT_LE(r.count, 2);
        EXPECT_NEAR(r.mean_fidelity, 1.0, 1e-12);
    }
}

TEST(RunPreparation, ProjectiveLimitCannotReachGenericPhase) {
    PreparationConfig cfg;
    cfg.p0 = 0.0;
    cfg.phi_target = kPi / 4;
    cfg.max_measurements = 200;
    for (int t = 0; t < 20; t++) {
        Rng rng(t);
        TrajectoryRecord r = run_preparation(cfg, rng);
        EXPECT_FALSE(r.converged);
        EXPECT_EQ(r.count_unsharp, 200);
    }
}

TEST(RunPreparation, MaxMeasurementsBoundsUnsharpCount) {
    PreparationConfig cfg;
    cfg.max_measurements = 3;
    cfg.noise.mapping.p_wrong = 0.4;
    for (int t = 0; t < 50; t++) {
        Rng rng(t);
        TrajectoryRecord r = run_preparation(cfg, rng);
        EXPECT_LE(r.count_unsharp, 3);
    }
}

TEST(RunPreparation, DeterministicForSeed) {
    PreparationConfig cfg;
    cfg.noise.emission.p_sp = 0.05;
    cfg.noise.mapping.p_wrong = 0.05;
    for (int t = 0; t < 20; t++) {
        Rng a(t);
        Rng b(t);
        TrajectoryRecord ra = run_preparation(cfg, a, true);
        TrajectoryRecord rb = run_preparation(cfg, b, true);
        EXPECT_EQ(ra.count, rb.count);
        EXPECT_EQ(ra.mean_fidelity, rb.mean_fidelity);
        ASSERT_EQ(ra.steps.size(), rb.steps.size());
        for (size_t k = 0; k < ra.steps.size(); k++) {
            EXPECT_EQ(ra.steps[k].true_state, rb.steps[k].true_state);
        }
    }
}
