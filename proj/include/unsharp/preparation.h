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


// Steering a qubit to sin(t/2) e^{ip/2}|0> + cos(t/2) e^{-ip/2}|1> with
// unsharp measurements only: y measurements until the azimuth is on target,
// then z measurements until the polar angle is. A stage that drifts away
// from its target restarts everything from (|0> + |1>)/sqrt2 via projective
// resets.

#ifndef UNSHARP_PREPARATION_H
#define UNSHARP_PREPARATION_H

#include <cstdint>

#include "unsharp/noise.h"
#include "unsharp/rng.h"
#include "unsharp/trajectory.h"

namespace unsharp {

struct PreparationConfig {
    double theta_target = 0.7853981633974483;
    double phi_target = 1.5707963267948966;
    double p0 = 0.15;
    double tol_phi = 0.05;
    double tol_theta = 0.05;
    /// A stage resets once its angular distance exceeds the distance at
    /// stage entry by guard_band * tolerance.
    double guard_band = 2.0;
    long long max_measurements = 2000;
    /// Error channels act on the unsharp measurements; resets are ideal.
    /// Dephasing is not used here.
    NoiseChannels noise;
    int n_trajectories = 1000;
    uint64_t seed = 1;

    void validate() const;
};

struct ResetResult {
    QubitState state;
    int steps;
};

/// Projective x, y, x, y, ... measurements until an x measurement returns +x.
/// Throws std::runtime_error after 1000 steps.
ResetResult reset_to_psi0(const QubitState &state, Rng &rng);

/// One preparation run. Decisions use the experimenter's belief (updated with
/// reported outcomes); fidelity is that of the true state with the target.
/// Exceeding max_measurements marks the record non-converged.
TrajectoryRecord run_preparation(const PreparationConfig &cfg, Rng &rng, bool record_steps = false);

}  // namespace unsharp

#endif
