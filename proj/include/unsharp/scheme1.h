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

// Two-species realization: the target ion's qubit {|g>, |e>} plus a
// metastable level |r>, a shared motional mode truncated to {|0>, |1>}, and
// the auxiliary ion's qubit {|down>, |up>}. The ideal sequence never
// populates a second phonon, so the truncation is exact for it.

#ifndef UNSHARP_SCHEME1_H
#define UNSHARP_SCHEME1_H

#include <array>
#include <numbers>

#include "unsharp/pulse.h"
#include "unsharp/qubit.h"
#include "unsharp/rng.h"

namespace unsharp {

enum class Level { kG = 0, kE = 1, kR = 2 };
enum class AuxSpin { kDown = 0, kUp = 1 };

/// Pulse phases that make the ideal sequence's amplitudes real and positive.
inline constexpr double kCarrierPhase = std::numbers::pi / 2;
inline constexpr double kSidebandPhase = 3 * std::numbers::pi / 2;

/// State on target{g,e,r} (x) phonon{0,1} (x) aux{down,up}; dimension 12.
class CompositeState {
   public:
    static constexpr size_t kDim = 12;

    /// |target>|phonon 0>|down>.
    static CompositeState prepared(const QubitState &target);
    /// A single basis ket.
    static CompositeState basis(Level level, int phonon, AuxSpin aux);

    static constexpr size_t index(Level level, int phonon, AuxSpin aux) {
        return static_cast<size_t>(level) * 4 + static_cast<size_t>(phonon) * 2 + static_cast<size_t>(aux);
    }

    Complex amplitude(Level level, int phonon, AuxSpin aux) const {
        return amp_[index(level, phonon, aux)];
    }
    Complex &amplitude(Level level, int phonon, AuxSpin aux) {
        return amp_[index(level, phonon, aux)];
    }
    const std::array<Complex, kDim> &amplitudes() const {
        return amp_;
    }
    std::array<Complex, kDim> &amplitudes() {
        return amp_;
    }

    double norm_sq() const;
    double population(Level level) const;
    double phonon_population(int phonon) const;
    double aux_population(AuxSpin aux) const;

   private:
    std::array<Complex, kDim> amp_{};
};

/// Resonant rotation exp(-i angle/2 (cos(phase) X + sin(phase) Y)) on the
/// named two-level transition (g-r, e-r or the g-e qubit), applied
/// identically in every phonon and auxiliary sector. With phase pi/2 the
/// lower level maps to cos(angle/2)|lower> + sin(angle/2)|r>.
CompositeState carrier_pulse(const CompositeState &state, Transition transition, double angle, double phase);

/// Red-sideband rotation on |lower, n=1> <-> |r, n=0> (lower = g or e). |lower, 0>
/// has no partner and is left alone, as is |r, 1> whose partner lies outside the
/// truncated phonon space. The default pi pulse with kSidebandPhase maps
/// |r,0> -> |lower,1> with a +1 amplitude.
CompositeState rsb_pulse(const CompositeState &state, Transition transition, double angle = std::numbers::pi,
                         double phase = kSidebandPhase);

CompositeState apply_pulse(const CompositeState &state, const Pulse &pulse);

/// Sequence for M0 = sqrt(p0) P+ + sqrt(1-p0) P-. The z axis compiles to
///   carrier(g-r, 2 acos sqrt p0), rsb(g-r, pi), carrier(e-r, 2 acos sqrt(1-p0)), rsb(e-r, pi);
/// other axes sandwich it between target-qubit rotations R^dag ... R with
/// R taking z to the axis, so the realized operators are R M(z) R^dag.
PulseProgram compile_scheme1(double p0, const MeasurementAxis &axis);

/// Runs every pulse of a scheme I program on |target>|0>|down>. Throws
/// std::invalid_argument for a scheme II program.
CompositeState run_scheme1(const PulseProgram &program, const QubitState &target);

/// Quantum-logic mapping |down,1> -> |up,0> on the auxiliary ion; |down,0> is
/// unchanged. Throws std::domain_error if the input has any |up> amplitude.
CompositeState qls_map(const CompositeState &state);

struct ReadoutBranch {
    double probability;
    /// Valid only when probability >= kMinOutcomeProbability.
    Vec2 target_amplitudes;
};

/// Projection of the auxiliary ion onto down (outcome 0) or up (outcome 1)
/// followed by extraction of the target qubit from the phonon-0 sector.
ReadoutBranch readout_branch(const CompositeState &state, Outcome outcome);

struct ReadoutResult {
    Outcome outcome;
    QubitState target;
    double probability;
};

/// Fluorescence detection: bright |down> is outcome 0, dark |up> is outcome 1.
/// Requires the post-mapping configuration (no |r> and no phonon population
/// beyond 1e-12); throws std::domain_error otherwise.
ReadoutResult fluorescence_readout(const CompositeState &state, Rng &rng);

/// The four single complex coefficients of the general-axis preparation
///   c1 (a1|0> + a2|1>)|g> + c2 (b1|0> + b2|1>)|e>
/// read off literally with p+- = sqrt(p0) +- sqrt(1 - p0).
struct ClosedFormCoefficients {
    Complex a1;
    Complex a2;
    Complex b1;
    Complex b2;
};

ClosedFormCoefficients closed_form_coefficients(double p0, const MeasurementAxis &axis);

/// The two target maps induced by the coefficients: diag(a1, b1) on the
/// auxiliary |0> branch and diag(a2, b2) on the |1> branch.
std::pair<Mat2, Mat2> closed_form_branch_maps(const ClosedFormCoefficients &c);

/// Matrix form of M0 and M1 (p+ I + p- r.sigma)/2, (p+ I - p- r.sigma)/2.
std::pair<Mat2, Mat2> closed_form_povm_matrices(double p0, const MeasurementAxis &axis);

}  // namespace unsharp

#endif
