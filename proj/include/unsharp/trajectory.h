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


#ifndef UNSHARP_TRAJECTORY_H
#define UNSHARP_TRAJECTORY_H

#include <optional>
#include <vector>

#include "unsharp/noise.h"
#include "unsharp/qubit.h"

namespace unsharp {

/// Optional error channels shared by both experiments. A disabled channel
/// still consumes its random draws, so switching it on perturbs nothing else.
struct NoiseChannels {
    std::optional<DephasingConfig> dephasing;
    MappingErrorConfig mapping;
    SpontaneousEmissionConfig emission;

    void validate() const;
};

enum class StepKind {
    kUnsharp,
    kReset,
};

struct TrajectoryStep {
    double time;
    StepKind kind;
    QubitState true_state;
    QubitState estimate;
    Outcome outcome;
    Outcome reported_outcome;
    bool collapsed;
    double fidelity;
};

struct TrajectoryRecord {
    /// Filled only when recording was requested.
    std::vector<TrajectoryStep> steps;
    /// Estimation: time average after the transient. Preparation: final
    /// fidelity with the target.
    double mean_fidelity = 0.0;
    /// All measurements, projective resets included.
    long long count = 0;
    /// Unsharp measurements only.
    long long count_unsharp = 0;
    long long resets = 0;
    bool converged = true;
};

}  // namespace unsharp

#endif
