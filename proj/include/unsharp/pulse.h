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

#ifndef UNSHARP_PULSE_H
#define UNSHARP_PULSE_H

#include <string>
#include <string_view>
#include <vector>

#include "unsharp/qubit.h"

namespace unsharp {

enum class PulseKind {
    kCarrier,
    kRedSideband,
    /// Two-ion exp(i angle sigma_z (x) sigma_z) interaction.
    kSqueeze,
};

enum class Transition {
    /// Target |g> <-> metastable |r>.
    kGR,
    /// Target |e> <-> metastable |r>.
    kER,
    /// Target qubit |g> <-> |e>.
    kGE,
    /// Auxiliary qubit (scheme II only).
    kAux,
    /// Target and auxiliary jointly (squeeze only).
    kTargetAux,
};

enum class Scheme {
    kSchemeI = 1,
    kSchemeII = 2,
};

/// An instantaneous ideal pulse. `angle` is the effective rotation angle
/// (Omega t) in [0, 2 pi]; `phase` selects the rotation axis
/// (cos phase, sin phase, 0) of the coupled two-level system.
struct Pulse {
    PulseKind kind;
    Transition transition;
    double angle;
    double phase;

    bool operator==(const Pulse &) const = default;
};

struct PulseProgram {
    Scheme scheme;
    /// Outcome-0 weight of the realized measurement.
    double p0;
    MeasurementAxis axis;
    std::vector<Pulse> pulses;
};

std::string_view kind_name(PulseKind kind);
std::string_view transition_name(Transition transition);

/// Decimal real with 17 significant digits (round-trips exactly).
std::string format_real(double value);

/// Line-oriented text form:
///   <scheme> <p0> <theta> <phi>
///   <kind> <transition> <angle> <phase>      (one line per pulse)
/// Every real is written with 17 significant digits, so parse_program
/// reproduces the program bit for bit.
std::string serialize_program(const PulseProgram &program);

/// Throws std::invalid_argument with a line number on malformed input.
PulseProgram parse_program(std::string_view text);

bool programs_identical(const PulseProgram &a, const PulseProgram &b);

}  // namespace unsharp

#endif
