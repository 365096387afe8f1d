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

#include "unsharp/scheme2.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;
// Z eigenvalue of target (index / 2) and aux (index % 2) for each basis state.
constexpr double kZt[4] = {1, 1, -1, -1};
constexpr double kZa[4] = {1, -1, 1, -1};

void check_chi(double chi) {
    if (!(chi >= 0.0) || !std::isfinite(chi)) {
        throw std::invalid_argument("scheme II: chi must be finite and >= 0, got " + std::to_string(chi));
    }
}

}  // namespace

TwoIonState TwoIonState::prepared(const QubitState &target) {
    TwoIonState s;
    s.amp[0] = target.amp_g();
    s.amp[2] = target.amp_e();
    return s;
}

double TwoIonState::norm_sq() const {
    double n = 0;
    for (const auto &c : amp) {
        n += std::norm(c);
    }
    return n;
}

Mat4 mat4_mul(const Mat4 &a, const Mat4 &b) {
    Mat4 r{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t k = 0; k < 4; k++) {
            Complex aik = a[4 * i + k];
            for (size_t j = 0; j < 4; j++) {
                r[4 * i + j] += aik * b[4 * k + j];
            }
        }
    }
    return r;
}

Vec4 mat4_apply(const Mat4 &m, const Vec4 &v) {
    Vec4 r{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            r[i] += m[4 * i + j] * v[j];
        }
    }
    return r;
}

Mat4 mat4_identity() {
    Mat4 m{};
    for (size_t i = 0; i < 4; i++) {
        m[5 * i] = 1.0;
    }
    return m;
}

Mat4 squeeze_unitary(double chi) {
    Mat4 m{};
    for (size_t i = 0; i < 4; i++) {
        m[5 * i] = std::polar(1.0, chi * kZt[i] * kZa[i]);
    }
    return m;
}

Mat4 kitagawa_unitary(double chi) {
    Mat4 m{};
    for (size_t i = 0; i < 4; i++) {
        double jz = kZt[i] + kZa[i];
        m[5 * i] = std::polar(1.0, 0.5 * chi * jz * jz);
    }
    return m;
}

Mat4 aux_rotation(double angle, double phase) {
    Mat2 u = equatorial_rotation(angle, phase);
    Mat4 m{};
    for (size_t t = 0; t < 2; t++) {
        for (size_t r = 0; r < 2; r++) {
            for (size_t c = 0; c < 2; c++) {
                m[4 * (2 * t + r) + (2 * t + c)] = u(r, c);
            }
        }
    }
    return m;
}

Mat4 scheme2_unitary(double chi) {
    // exp(i pi/4 X) = rotation by pi/2 about -x; exp(i pi/4 Y) = rotation by pi/2 about -y.
    Mat4 first = aux_rotation(kPi / 2, kPi);
    Mat4 last = aux_rotation(kPi / 2, 3 * kPi / 2);
    return mat4_mul(last, mat4_mul(squeeze_unitary(chi), first));
}

TwoIonState scheme2_evolve(const QubitState &target, double chi) {
    check_chi(chi);
    TwoIonState s = TwoIonState::prepared(target);
    s.amp = mat4_apply(scheme2_unitary(chi), s.amp);
    return s;
}

TwoIonState scheme2_first_order_state(const QubitState &target, double chi) {
    Complex c1 = target.amp_g();
    Complex c2 = target.amp_e();
    Complex pre = std::polar(1.0, kPi / 4) / std::sqrt(2.0);
    // Textbook ordering: (down branch, up branch).
    Complex down_g = pre * kI * c1 * (1 + chi);
    Complex down_e = pre * kI * c2 * (1 - chi);
    Complex up_g = pre * c1 * (1 - chi);
    Complex up_e = pre * c2 * (1 + chi);
    // Global -i, and |up> carries the opposite sign in this basis.
    Complex g = -kI;
    TwoIonState s;
    s.amp[0] = g * down_g;
    s.amp[1] = -g * up_g;
    s.amp[2] = g * down_e;
    s.amp[3] = -g * up_e;
    return s;
}

double scheme2_effective_p0(double chi) {
    return 0.5 * (1.0 - std::sin(2.0 * chi));
}

SymmetricPovm scheme2_effective_povm(double chi) {
    check_chi(chi);
    if (chi > kMaxChi) {
        throw std::invalid_argument("scheme II: chi above pi/4 over-rotates the measurement");
    }
    Mat4 u = scheme2_unitary(chi);
    // Target operator on the outcome-0 (|up>) branch: <up| U |down>.
    size_t aux = scheme2_aux_index(Outcome::kZero);
    Complex kg = u[4 * (0 + aux) + 0];
    Complex ke = u[4 * (2 + aux) + 2];
    double p0 = std::norm(kg) / (std::norm(kg) + std::norm(ke));
    // The closed form and the extracted operator agree to rounding; clamp the
    // extracted value into the valid range.
    p0 = std::clamp(p0, 0.0, 0.5);
    return build_symmetric_povm(p0, MeasurementAxis::z());
}

PulseProgram compile_scheme2(double chi) {
    SymmetricPovm eff = scheme2_effective_povm(chi);
    return PulseProgram{Scheme::kSchemeII,
                        eff.p0,
                        MeasurementAxis::z(),
                        {
                            {PulseKind::kCarrier, Transition::kAux, kPi / 2, kPi},
                            {PulseKind::kSqueeze, Transition::kTargetAux, chi, 0.0},
                            {PulseKind::kCarrier, Transition::kAux, kPi / 2, 3 * kPi / 2},
                        }};
}

TwoIonState run_scheme2(const PulseProgram &program, const QubitState &target) {
    if (program.scheme != Scheme::kSchemeII) {
        throw std::invalid_argument("run_scheme2: program is not a scheme II program");
    }
    TwoIonState s = TwoIonState::prepared(target);
    for (const auto &p : program.pulses) {
        if (p.kind == PulseKind::kCarrier && p.transition == Transition::kAux) {
            s.amp = mat4_apply(aux_rotation(p.angle, p.phase), s.amp);
        } else if (p.kind == PulseKind::kSqueeze && p.transition == Transition::kTargetAux) {
            s.amp = mat4_apply(squeeze_unitary(p.angle), s.amp);
        } else {
            throw std::invalid_argument("run_scheme2: unsupported pulse '" + std::string(kind_name(p.kind)) + " " +
                                        std::string(transition_name(p.transition)) + "'");
        }
    }
    return s;
}

}  // namespace unsharp
