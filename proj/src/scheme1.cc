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

#include "unsharp/scheme1.h"

#include <cmath>
#include <stdexcept>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLeakageTolerance = 1e-12;

constexpr AuxSpin kAuxSpins[] = {AuxSpin::kDown, AuxSpin::kUp};

void rotate_pair(std::array<Complex, CompositeState::kDim> &amp, size_t lower, size_t upper, const Mat2 &u) {
    Complex a = amp[lower];
    Complex b = amp[upper];
    amp[lower] = u(0, 0) * a + u(0, 1) * b;
    amp[upper] = u(1, 0) * a + u(1, 1) * b;
}

double normalize_phase(double phase) {
    double p = std::fmod(phase, 2 * kPi);
    if (p < 0) {
        p += 2 * kPi;
    }
    if (p >= 2 * kPi) {
        p = 0.0;
    }
    return p;
}

}  // namespace

CompositeState CompositeState::prepared(const QubitState &target) {
    CompositeState s;
    s.amplitude(Level::kG, 0, AuxSpin::kDown) = target.amp_g();
    s.amplitude(Level::kE, 0, AuxSpin::kDown) = target.amp_e();
    return s;
}

CompositeState CompositeState::basis(Level level, int phonon, AuxSpin aux) {
    CompositeState s;
    s.amplitude(level, phonon, aux) = 1.0;
    return s;
}

double CompositeState::norm_sq() const {
    double n = 0;
    for (const auto &c : amp_) {
        n += std::norm(c);
    }
    return n;
}

double CompositeState::population(Level level) const {
    double n = 0;
    for (int ph = 0; ph < 2; ph++) {
        for (auto a : kAuxSpins) {
            n += std::norm(amplitude(level, ph, a));
        }
    }
    return n;
}

double CompositeState::phonon_population(int phonon) const {
    double n = 0;
    for (auto l : {Level::kG, Level::kE, Level::kR}) {
        for (auto a : kAuxSpins) {
            n += std::norm(amplitude(l, phonon, a));
        }
    }
    return n;
}

double CompositeState::aux_population(AuxSpin aux) const {
    double n = 0;
    for (auto l : {Level::kG, Level::kE, Level::kR}) {
        for (int ph = 0; ph < 2; ph++) {
            n += std::norm(amplitude(l, ph, aux));
        }
    }
    return n;
}

CompositeState carrier_pulse(const CompositeState &state, Transition transition, double angle, double phase) {
    Level lower;
    Level upper;
    switch (transition) {
        case Transition::kGR:
            lower = Level::kG;
            upper = Level::kR;
            break;
        case Transition::kER:
            lower = Level::kE;
            upper = Level::kR;
            break;
        case Transition::kGE:
            lower = Level::kG;
            upper = Level::kE;
            break;
        default:
            throw std::invalid_argument("carrier_pulse: transition not present in scheme I");
    }
    Mat2 u = equatorial_rotation(angle, phase);
    CompositeState out = state;
    for (int ph = 0; ph < 2; ph++) {
        for (auto a : kAuxSpins) {
            rotate_pair(out.amplitudes(), CompositeState::index(lower, ph, a), CompositeState::index(upper, ph, a), u);
        }
    }
    return out;
}

CompositeState rsb_pulse(const CompositeState &state, Transition transition, double angle, double phase) {
    Level lower;
    if (transition == Transition::kGR) {
        lower = Level::kG;
    } else if (transition == Transition::kER) {
        lower = Level::kE;
    } else {
        throw std::invalid_argument("rsb_pulse: sidebands are driven on g-r or e-r only");
    }
    Mat2 u = equatorial_rotation(angle, phase);
    CompositeState out = state;
    for (auto a : kAuxSpins) {
        rotate_pair(out.amplitudes(), CompositeState::index(lower, 1, a), CompositeState::index(Level::kR, 0, a), u);
    }
    return out;
}

CompositeState apply_pulse(const CompositeState &state, const Pulse &pulse) {
    switch (pulse.kind) {
        case PulseKind::kCarrier:
            return carrier_pulse(state, pulse.transition, pulse.angle, pulse.phase);
        case PulseKind::kRedSideband:
            return rsb_pulse(state, pulse.transition, pulse.angle, pulse.phase);
        case PulseKind::kSqueeze:
            break;
    }
    throw std::invalid_argument("apply_pulse: squeeze pulses belong to scheme II");
}

PulseProgram compile_scheme1(double p0, const MeasurementAxis &axis) {
    // Validates p0.
    build_symmetric_povm(p0, axis);
    std::vector<Pulse> core{
        {PulseKind::kCarrier, Transition::kGR, 2 * std::acos(std::sqrt(p0)), kCarrierPhase},
        {PulseKind::kRedSideband, Transition::kGR, kPi, kSidebandPhase},
        {PulseKind::kCarrier, Transition::kER, 2 * std::acos(std::sqrt(1 - p0)), kCarrierPhase},
        {PulseKind::kRedSideband, Transition::kER, kPi, kSidebandPhase},
    };
    PulseProgram program{Scheme::kSchemeI, p0, axis, {}};
    if (axis.is_z()) {
        program.pulses = std::move(core);
        return program;
    }
    // R rotates the Bloch vector by theta about (-sin phi, cos phi, 0), taking z to r.
    double r_phase = normalize_phase(axis.phi() + kPi / 2);
    double r_dag_phase = normalize_phase(axis.phi() + 3 * kPi / 2);
    program.pulses.push_back({PulseKind::kCarrier, Transition::kGE, axis.theta(), r_dag_phase});
    program.pulses.insert(program.pulses.end(), core.begin(), core.end());
    program.pulses.push_back({PulseKind::kCarrier, Transition::kGE, axis.theta(), r_phase});
    return program;
}

CompositeState run_scheme1(const PulseProgram &program, const QubitState &target) {
    if (program.scheme != Scheme::kSchemeI) {
        throw std::invalid_argument("run_scheme1: program is not a scheme I program");
    }
    CompositeState s = CompositeState::prepared(target);
    for (const auto &p : program.pulses) {
        s = apply_pulse(s, p);
    }
    return s;
}

CompositeState qls_map(const CompositeState &state) {
    if (state.aux_population(AuxSpin::kUp) > kLeakageTolerance) {
        throw std::domain_error("qls_map: auxiliary ion must start in |down>");
    }
    Mat2 u = equatorial_rotation(kPi, kSidebandPhase);
    CompositeState out = state;
    for (auto l : {Level::kG, Level::kE, Level::kR}) {
        rotate_pair(out.amplitudes(), CompositeState::index(l, 0, AuxSpin::kUp),
                    CompositeState::index(l, 1, AuxSpin::kDown), u);
    }
    return out;
}

ReadoutBranch readout_branch(const CompositeState &state, Outcome outcome) {
    AuxSpin aux = outcome == Outcome::kZero ? AuxSpin::kDown : AuxSpin::kUp;
    return ReadoutBranch{state.aux_population(aux),
                         Vec2{state.amplitude(Level::kG, 0, aux), state.amplitude(Level::kE, 0, aux)}};
}

ReadoutResult fluorescence_readout(const CompositeState &state, Rng &rng) {
    if (state.population(Level::kR) > kLeakageTolerance || state.phonon_population(1) > kLeakageTolerance) {
        throw std::domain_error("fluorescence_readout: state is not in the post-mapping configuration");
    }
    ReadoutBranch bright = readout_branch(state, Outcome::kZero);
    double total = state.norm_sq();
    Outcome o = rng.uniform() * total < bright.probability ? Outcome::kZero : Outcome::kOne;
    ReadoutBranch b = o == Outcome::kZero ? bright : readout_branch(state, Outcome::kOne);
    return ReadoutResult{o, QubitState(b.target_amplitudes[0], b.target_amplitudes[1]), b.probability / total};
}

ClosedFormCoefficients closed_form_coefficients(double p0, const MeasurementAxis &axis) {
    build_symmetric_povm(p0, axis);
    double pp = std::sqrt(p0) + std::sqrt(1 - p0);
    double pm = std::sqrt(p0) - std::sqrt(1 - p0);
    double ct = std::cos(axis.theta());
    double st = std::sin(axis.theta());
    Complex ga = ct - st * std::polar(1.0, -axis.phi());
    Complex eb = ct + st * std::polar(1.0, axis.phi());
    return ClosedFormCoefficients{
        0.5 * (pp - pm * ga),
        0.5 * (pp + pm * ga),
        0.5 * (pp + pm * eb),
        0.5 * (pp - pm * eb),
    };
}

std::pair<Mat2, Mat2> closed_form_branch_maps(const ClosedFormCoefficients &c) {
    return {Mat2::diag(c.a1, c.b1), Mat2::diag(c.a2, c.b2)};
}

std::pair<Mat2, Mat2> closed_form_povm_matrices(double p0, const MeasurementAxis &axis) {
    build_symmetric_povm(p0, axis);
    double pp = std::sqrt(p0) + std::sqrt(1 - p0);
    double pm = std::sqrt(p0) - std::sqrt(1 - p0);
    double ct = std::cos(axis.theta());
    double st = std::sin(axis.theta());
    Complex lo = st * std::polar(1.0, axis.phi());
    Complex up = st * std::polar(1.0, -axis.phi());
    Mat2 m0{{0.5 * (pp + pm * ct), 0.5 * pm * up, 0.5 * pm * lo, 0.5 * (pp - pm * ct)}};
    Mat2 m1{{0.5 * (pp - pm * ct), -0.5 * pm * up, -0.5 * pm * lo, 0.5 * (pp + pm * ct)}};
    return {m0, m1};
}

}  // namespace unsharp
