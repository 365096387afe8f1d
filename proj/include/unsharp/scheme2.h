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

// Same-species realization through a weak sigma_z (x) sigma_z squeeze.
//
// Conventions: auxiliary basis index 0 is |down>, the sigma_z = +1 eigenstate
// the auxiliary ion is pumped into before the sequence; index 1 is |up>. The
// sequence is U = exp(i pi/4 Y_aux) exp(i chi Z (x) Z_aux) exp(i pi/4 X_aux).
// With these kets the exact final state equals -i times the textbook
// first-order expression (with 1 +- chi replaced by cos chi +- sin chi) once
// |up> is taken with the opposite sign; scheme2_first_order_state() returns
// that expression in this basis.

#ifndef UNSHARP_SCHEME2_H
#define UNSHARP_SCHEME2_H

#include <array>
#include <numbers>

#include "unsharp/pulse.h"
#include "unsharp/qubit.h"

namespace unsharp {

/// Squeeze strengths above this are reported as leaving the weak regime.
inline constexpr double kWeakChiAdvisory = 0.2;
/// chi = pi/4 already gives a projective measurement.
inline constexpr double kMaxChi = std::numbers::pi / 4;

using Vec4 = std::array<Complex, 4>;
using Mat4 = std::array<Complex, 16>;

/// target{g,e} (x) aux{down,up}, index = 2 * target + aux.
struct TwoIonState {
    Vec4 amp{};

    static TwoIonState prepared(const QubitState &target);
    double norm_sq() const;
};

Mat4 mat4_mul(const Mat4 &a, const Mat4 &b);
Vec4 mat4_apply(const Mat4 &m, const Vec4 &v);
Mat4 mat4_identity();

/// exp(i chi Z (x) Z_aux), diagonal.
Mat4 squeeze_unitary(double chi);

/// exp(i (chi/2) Jz^2) with Jz = Z (x) I + I (x) Z_aux.
Mat4 kitagawa_unitary(double chi);

/// Full three-factor evolution operator.
Mat4 scheme2_unitary(double chi);

/// Auxiliary single-qubit rotation lifted to the two-ion space.
Mat4 aux_rotation(double angle, double phase);

/// Exact U applied to |target>|down>. Throws std::invalid_argument for chi < 0.
TwoIonState scheme2_evolve(const QubitState &target, double chi);

/// First-order expression e^{i pi/4}/sqrt2 {[i c1 (1+chi)|g> + i c2 (1-chi)|e>]|down>
///   + [c1 (1-chi)|g> + c2 (1+chi)|e>]|up>}, re-expressed in this module's kets
/// (see file comment) so it agrees with scheme2_evolve to O(chi^2).
TwoIonState scheme2_first_order_state(const QubitState &target, double chi);

/// Outcome 0 (the M0 branch) is |up>, outcome 1 is |down>.
inline int scheme2_aux_index(Outcome o) {
    return o == Outcome::kZero ? 1 : 0;
}

/// Exact p0 of the realized measurement, (1 - sin 2 chi) / 2.
double scheme2_effective_p0(double chi);

/// Effective z-axis measurement extracted from the exact evolution. Throws
/// std::invalid_argument unless 0 <= chi <= pi/4.
SymmetricPovm scheme2_effective_povm(double chi);

/// Program form: aux(pi/2, phase pi), squeeze(chi), aux(pi/2, phase 3pi/2).
PulseProgram compile_scheme2(double chi);

/// Runs a scheme II program on |target>|down>.
TwoIonState run_scheme2(const PulseProgram &program, const QubitState &target);

}  // namespace unsharp

#endif
