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

#include <gtest/gtest.h>

#include <cmath>

#include "unsharp/sweep.h"

using namespace unsharp;

namespace {

double mean_fidelity(const EstimationConfig &cfg, int n, uint64_t seed) {
    double sum = 0;
    for (int t = 0; t < n; t++) {
        Rng rng(derive_seed(seed, kEstimationStream, t));
        sum += run_estimation_trajectory(cfg, rng).mean_fidelity;
    }
    return sum / n;
}

// Monte-Carlo oracle: z measurements on |+x> until a population reaches 0.99.
double simulated_collapse(double p0, int runs) {
    SymmetricPovm m = build_symmetric_povm(p0, MeasurementAxis::z());
    Rng rng(77);
    double h = std::sqrt(0.5);
    long long total = 0;
    for (int r = 0; r < runs; r++) {
        QubitState s(h, h);
        int n = 0;
        while (s.population_g() < 0.99 && s.population_e() < 0.99) {
            s = apply_measurement(s, m, sample_outcome(s, m, rng)).state;
            n++;
        }
        total += n;
    }
    return total / double(runs);
}

}  // namespace

TEST(EstimationConfig, Validation) {
    EstimationConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_DOUBLE_EQ(cfg.epoch_spacing(), 0.01);
    cfg.p0 = 0.6;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = EstimationConfig{};
    cfg.measurements_per_period = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = EstimationConfig{};
    cfg.noise.mapping.p_wrong = 1.1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = EstimationConfig{};
    cfg.noise.dephasing = DephasingConfig{-1.0, DephasingModel::kQuasiStatic, 1e-3};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(EstimationTrajectory, DeterministicForSeed) {
    EstimationConfig cfg;
    cfg.noise.mapping.p_wrong = 0.05;
    cfg.noise.emission.p_sp = 0.001;
    cfg.noise.dephasing = DephasingConfig{0.3, DephasingModel::kWhiteGaussianPerStep, 1e-3};
    Rng a(5);
    Rng b(5);
    TrajectoryRecord ra = run_estimation_trajectory(cfg, a, true);
    TrajectoryRecord rb = run_estimation_trajectory(cfg, b, true);
    ASSERT_EQ(ra.steps.size(), rb.steps.size());
    EXPECT_EQ(ra.mean_fidelity, rb.mean_fidelity);
    for (size_t k = 0; k < ra.steps.size(); k++) {
        EXPECT_EQ(ra.steps[k].true_state, rb.steps[k].true_state);
        EXPECT_EQ(ra.steps[k].reported_outcome, rb.steps[k].reported_outcome);
        EXPECT_EQ(ra.steps[k].collapsed, rb.steps[k].collapsed);
    }
}

TEST(EstimationTrajectory, RecordShape) {
    EstimationConfig cfg;
    cfg.transient_skip_periods = 2;
    cfg.duration_periods = 3;
    Rng rng(6);
    TrajectoryRecord r = run_estimation_trajectory(cfg, rng, true);
    EXPECT_EQ(r.count, 50);
    EXPECT_EQ(r.steps.size(), 50u);
    EXPECT_NEAR(r.steps.back().time, 0.5, 1e-12);
    double sum = 0;
    for (size_t k = 20; k < 50; k++) {
        sum += r.steps[k].fidelity;
    }
    EXPECT_NEAR(r.mean_fidelity, sum / 30, 1e-12);
    for (const auto &s : r.steps) {
        EXPECT_EQ(s.outcome, s.reported_outcome);
        EXPECT_FALSE(s.collapsed);
    }
}

TEST(EstimationTrajectory, NoiselessTracksTheTruth) {
    EstimationConfig cfg;
    EXPECT_GE(mean_fidelity(cfg, 100, 1), 0.99);
}

TEST(EstimationTrajectory, AlwaysWrongReportsAntiTrack) {
    EstimationConfig cfg;
    cfg.noise.mapping.p_wrong = 1.0;
    EXPECT_LT(mean_fidelity(cfg, 20, 2), 0.05);
}

TEST(EstimationTrajectory, FidelityImprovesWithSharpness) {
    // Short window without transient removal so information gain shows in the average.
    EstimationConfig cfg;
    cfg.transient_skip_periods = 0;
    cfg.duration_periods = 20;
    double previous = 0;
    for (double dp : {0.02, 0.05, 0.1}) {
        cfg.p0 = (1 - dp) / 2;
        double f = mean_fidelity(cfg, 300, 3);
        EXPECT_GT(f, previous);
        previous = f;
    }
}

TEST(EstimationTrajectory, ProjectiveReadoutRecoversFromImpossibleReport) {
    EstimationConfig cfg;
    cfg.p0 = 0.0;
    cfg.transient_skip_periods = 0;
    cfg.duration_periods = 5;
    cfg.noise.mapping.p_wrong = 0.3;
    Rng rng(7);
    TrajectoryRecord r = run_estimation_trajectory(cfg, rng, true);
    for (const auto &s : r.steps) {
        EXPECT_NEAR(s.estimate.population_g() + s.estimate.population_e(), 1.0, 1e-12);
    }
}

TEST(ExpectedCollapseMeasurements, AgreesWithMonteCarlo) {
    EXPECT_TRUE(std::isinf(expected_collapse_measurements(0.5)));
    EXPECT_EQ(expected_collapse_measurements(0.0), 1.0);
    EXPECT_EQ(expected_collapse_measurements(0.005), 1.0);
    EXPECT_NEAR(expected_collapse_measurements(0.45), 225.49, 0.01);
    for (double p0 : {0.1, 0.3, 0.45}) {
        double exact = expected_collapse_measurements(p0);
        double mc = simulated_collapse(p0, 20000);
        EXPECT_NEAR(mc / exact, 1.0, 0.03) << p0;
    }
    EXPECT_THROW(expected_collapse_measurements(0.7), std::invalid_argument);
}

TEST(CheckTimescales, DefaultsAreOrdered) {
    EstimationConfig cfg;
    cfg.noise.dephasing = DephasingConfig{delta_beta_from_ramsey(2.5), DephasingModel::kQuasiStatic, 1e-3};
    TimescaleReport r = check_timescales(cfg);
    EXPECT_TRUE(r.ordered) << (r.warnings.empty() ? "" : r.warnings[0]);
    EXPECT_NEAR(r.tau_m, 2.2549, 1e-3);
    EXPECT_NEAR(r.tau_n, 2.5, 1e-12);
    EXPECT_EQ(r.tau_r, 0.1);
}

TEST(CheckTimescales, WarnsOnViolations) {
    EstimationConfig cfg;
    cfg.p0 = 0.05;
    TimescaleReport fast = check_timescales(cfg);
    EXPECT_FALSE(fast.ordered);
    EXPECT_EQ(fast.warnings.size(), 1u);

    cfg = EstimationConfig{};
    cfg.noise.dephasing = DephasingConfig{delta_beta_from_ramsey(0.5), DephasingModel::kQuasiStatic, 1e-3};
    EXPECT_FALSE(check_timescales(cfg).ordered);

    cfg = EstimationConfig{};
    cfg.measurement_duration = 0.2;
    EXPECT_FALSE(check_timescales(cfg).ordered);
}
