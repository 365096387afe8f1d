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


// Real-time tracking of a Rabi-driven qubit from a record of unsharp z
// measurements, with the true state exposed to the error channels and the
// estimate propagated with the known noiseless drive.

#ifndef UNSHARP_ESTIMATION_H
#define UNSHARP_ESTIMATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "unsharp/noise.h"
#include "unsharp/rng.h"
#include "unsharp/trajectory.h"

namespace unsharp {

struct EstimationConfig {
    double p0 = 0.45;
    int measurements_per_period = 10;
    /// Rabi period tau_R, s.
    double rabi_period = 0.1;
    RabiConvention rabi_convention = RabiConvention::kAngular;
    /// Duration of one measurement, s. Used only by the timescale guard.
    double measurement_duration = 15e-6;
    NoiseChannels noise;
    int n_trajectories = 1000;
    /// Averaging window, counted after the transient.
    int duration_periods = 30;
    int transient_skip_periods = 100;
    uint64_t seed = 1;

    void validate() const;
    double epoch_spacing() const {
        return rabi_period / measurements_per_period;
    }
};

/// True state starts in |g>; the estimate starts in (|g> + |e>)/sqrt2.
TrajectoryRecord run_estimation_trajectory(const EstimationConfig &cfg, Rng &rng, bool record_steps = false);

/// Mean number of unsharp measurements for (|g>+|e>)/sqrt2 to reach a
/// z population of 0.99 (either pole), by an exact linear solve of the
/// random walk of ln(P_g / P_e). Infinite at p0 = 0.5; 1 at p0 <= 0.01.
double expected_collapse_measurements(double p0);

struct TimescaleReport {
    double tau_meas;
    double tau_r;
    double tau_m;
    double tau_n;
    bool ordered;
    std::vector<std::string> warnings;
};

/// Checks tau_meas < tau_R < tau_m < tau_N for a configuration.
TimescaleReport check_timescales(const EstimationConfig &cfg);

}  // namespace unsharp

#endif
