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

#include "unsharp/qubit.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleEpsilon = 1e-14;

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

QubitState::QubitState(Complex amp_g, Complex amp_e) {
    if (!finite(amp_g) || !finite(amp_e)) {
        throw std::invalid_argument("QubitState: non-finite amplitude");
    }
    double n = std::sqrt(std::norm(amp_g) + std::norm(amp_e));
    if (n == 0.0 || !std::isfinite(n)) {
        throw std::invalid_argument("QubitState: zero-norm amplitudes");
    }
    amp_ = {amp_g / n, amp_e / n};
}

Complex QubitState::expectation(const Mat2 &op) const {
    return inner(amp_, op * amp_);
}

QubitState QubitState::evolved(const Mat2 &op) const {
    Vec2 v = op * amp_;
    if (norm_sq(v) < kMinOutcomeProbability) {
        throw std::domain_error("QubitState::evolved: operator annihilates the state");
    }
    return QubitState(v[0], v[1]);
}

MeasurementAxis::MeasurementAxis(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::invalid_argument("MeasurementAxis: theta must lie in [0, pi], got " + std::to_string(theta));
    }
    if (!(phi >= 0.0 && phi < 2 * kPi)) {
        throw std::invalid_argument("MeasurementAxis: phi must lie in [0, 2pi), got " + std::to_string(phi));
    }
}

MeasurementAxis MeasurementAxis::x() {
    return MeasurementAxis(kPi / 2, 0.0);
}

MeasurementAxis MeasurementAxis::y() {
    return MeasurementAxis(kPi / 2, kPi / 2);
}

std::array<double, 3> MeasurementAxis::unit_vector() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

Mat2 MeasurementAxis::pauli_component() const {
    double st = std::sin(theta_);
    double ct = std::cos(theta_);
    Complex off = st * std::polar(1.0, -phi_);
    return Mat2{{ct, off, std::conj(off), -ct}};
}

std::pair<Mat2, Mat2> projectors(const MeasurementAxis &axis) {
    Mat2 rs = axis.pauli_component();
    Mat2 id = Mat2::identity();
    return {0.5 * (id + rs), 0.5 * (id - rs)};
}

SymmetricPovm build_symmetric_povm(double p0, const MeasurementAxis &axis) {
    if (!(p0 >= 0.0 && p0 <= 0.5)) {
        throw std::invalid_argument("build_symmetric_povm: p0 must lie in [0, 0.5], got " + std::to_string(p0));
    }
    auto [pp, pm] = projectors(axis);
    double s0 = std::sqrt(p0);
    double s1 = std::sqrt(1.0 - p0);
    Mat2 m0 = s0 * pp + s1 * pm;
    Mat2 m1 = s1 * pp + s0 * pm;
    if (p0 == 0.5) {
        // Exact identity channel; avoids sqrt(0.5) rounding differences between P+ and P-.
        m0 = Mat2::diag(std::sqrt(0.5), std::sqrt(0.5));
        m1 = m0;
    }
    return SymmetricPovm{p0, axis, m0, m1, 1.0 - 2.0 * p0};
}

double outcome_probability(const QubitState &state, const SymmetricPovm &povm, Outcome outcome) {
    return norm_sq(povm.op(outcome) * state.amplitudes());
}

MeasurementResult apply_kraus(const QubitState &state, const Mat2 &kraus) {
    Vec2 v = kraus * state.amplitudes();
    double p = norm_sq(v);
    if (!(p >= kMinOutcomeProbability)) {
        throw std::domain_error("apply_measurement: outcome has zero probability");
    }
    return MeasurementResult{QubitState(v[0], v[1]), p};
}

MeasurementResult apply_measurement(const QubitState &state, const SymmetricPovm &povm, Outcome outcome) {
    return apply_kraus(state, povm.op(outcome));
}

Outcome sample_outcome(const QubitState &state, const SymmetricPovm &povm, Rng &rng) {
    double p_zero = outcome_probability(state, povm, Outcome::kZero);
    return rng.uniform() < p_zero ? Outcome::kZero : Outcome::kOne;
}

BlochAngles bloch_angles(const QubitState &state) {
    double r0 = std::abs(state.amp_g());
    double r1 = std::abs(state.amp_e());
    double theta = 2.0 * std::atan2(r0, r1);
    if (r0 < kPoleEpsilon || r1 < kPoleEpsilon) {
        return {theta, 0.0};
    }
    double phi = std::arg(state.amp_g()) - std::arg(state.amp_e());
    phi = std::fmod(phi, 2 * kPi);
    if (phi < 0) {
        phi += 2 * kPi;
    }
    if (phi >= 2 * kPi) {
        phi = 0.0;
    }
    return {theta, phi};
}

QubitState state_from_angles(double theta, double phi) {
    return QubitState(std::sin(theta / 2) * std::polar(1.0, phi / 2), std::cos(theta / 2) * std::polar(1.0, -phi / 2));
}

double fidelity(const QubitState &a, const QubitState &b) {
    double f = std::norm(inner(a.amplitudes(), b.amplitudes()));
    return std::min(f, 1.0);
}

double wrap_angle(double d) {
    d = std::fmod(d, 2 * kPi);
    if (d <= -kPi) {
        d += 2 * kPi;
    } else if (d > kPi) {
        d -= 2 * kPi;
    }
    return d;
}

}  // namespace unsharp
