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

#ifndef UNSHARP_VERIFY_H
#define UNSHARP_VERIFY_H

#include <array>
#include <string>
#include <vector>

#include "unsharp/pulse.h"
#include "unsharp/qubit.h"

namespace unsharp {

struct PhysicalBranch {
    double probability;
    /// Unnormalized target amplitudes left in the readable sector.
    Vec2 target;
};

struct PhysicalBranches {
    std::array<PhysicalBranch, 2> branch;
    /// Weight that ended outside the readable sector (|r> or a leftover phonon).
    double leakage;
};

/// Runs the complete physical pipeline for either scheme and splits it by
/// readout outcome, without sampling.
PhysicalBranches measurement_branches(const PulseProgram &program, const QubitState &target);

struct VerificationRow {
    std::string input;
    int outcome;
    double physical_probability;
    double abstract_probability;
    /// 1 - fidelity of the conditional post-states (0 when the branch is impossible).
    double infidelity;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    double max_probability_deviation = 0;
    double max_infidelity = 0;
    double max_leakage = 0;
    /// Largest of the three above.
    double max_deviation = 0;
    /// The abstract measurement has zero sharpness.
    bool zero_information = false;
};

/// Compares the physical pipeline with apply_measurement on
/// {|g>, |e>, (|g>+|e>)/sqrt2, (|g>+i|e>)/sqrt2}. Deviations are reported,
/// never thrown.
VerificationReport verify_compilation(const PulseProgram &program, const SymmetricPovm &povm);

/// Same comparison on caller-chosen inputs.
VerificationReport verify_compilation(const PulseProgram &program, const SymmetricPovm &povm,
                                      const std::vector<QubitState> &inputs);

std::string format_report(const VerificationReport &report);

}  // namespace unsharp

#endif
