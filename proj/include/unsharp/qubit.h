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

#ifndef UNSHARP_QUBIT_H
#define UNSHARP_QUBIT_H

#include <array>
#include <cstdint>
#include <utility>

#include "unsharp/linalg.h"
#include "unsharp/rng.h"

namespace unsharp {

/// Outcomes below this probability are treated as impossible by apply_measurement.
inline constexpr double kMinOutcomeProbability = 1e-24;

/// Normalized pure qubit state c_g|g> + c_e|e>, with |g> == |0> the +1
/// eigenstate of sigma_z.
class QubitState {
   public:
    /// Normalizes the given amplitudes. Throws std::invalid_argument when they
    /// are non-finite or both zero.
    QubitState(Complex amp_g, Complex amp_e);

    static QubitState ground() {
        return QubitState(1.0, 0.0);
    }
    static QubitState excited() {
        return QubitState(0.0, 1.0);
    }

    Complex amp_g() const {
        return amp_[0];
    }
    Complex amp_e() const {
        return amp_[1];
    }
    const Vec2 &amplitudes() const {
        return amp_;
    }

    /// Populations |c_g|^2 and |c_e|^2.
    double population_g() const {
        return std::norm(amp_[0]);
    }
    double population_e() const {
        return std::norm(amp_[1]);
    }

    /// <psi|op|psi>.
    Complex expectation(const Mat2 &op) const;

    /// op|psi>, renormalized. Throws std::domain_error if op annihilates the state.
    QubitState evolved(const Mat2 &op) const;

    bool operator==(const QubitState &other) const = default;

   private:
    Vec2 amp_;
};

/// Measurement direction r = (sin t cos p, sin t sin p, cos t).
class MeasurementAxis {
   public:
    /// theta in [0, pi], phi in [0, 2 pi). Throws std::invalid_argument otherwise.
    MeasurementAxis(double theta, double phi);

    static MeasurementAxis z() {
        return MeasurementAxis(0.0, 0.0);
    }
    static MeasurementAxis x();
    static MeasurementAxis y();

    double theta() const {
        return theta_;
    }
    double phi() const {
        return phi_;
    }
    std::array<double, 3> unit_vector() const;

    /// r . sigma
    Mat2 pauli_component() const;

    bool is_z() const {
        return theta_ == 0.0;
    }

   private:
    double theta_;
    double phi_;
};

enum class Outcome : uint8_t {
    kZero = 0,
    kOne = 1,
};

inline Outcome flipped(Outcome o) {
    return o == Outcome::kZero ? Outcome::kOne : Outcome::kZero;
}

inline int index_of(Outcome o) {
    return static_cast<int>(o);
}

/// Two-outcome symmetric unsharp measurement
///   M0 = sqrt(p0) P+ + sqrt(1 - p0) P-,  M1 = sqrt(1 - p0) P+ + sqrt(p0) P-.
struct SymmetricPovm {
    double p0;
    MeasurementAxis axis;
    Mat2 m0;
    Mat2 m1;
    /// Sharpness 1 - 2 p0: 1 is projective, 0 carries no information.
    double delta_p;

    const Mat2 &op(Outcome o) const {
        return o == Outcome::kZero ? m0 : m1;
    }
};

/// (P+, P-) = (I +- r.sigma) / 2.
std::pair<Mat2, Mat2> projectors(const MeasurementAxis &axis);

/// Throws std::invalid_argument unless 0 <= p0 <= 0.5.
SymmetricPovm build_symmetric_povm(double p0, const MeasurementAxis &axis);

/// <psi| M_i^dag M_i |psi>.
double outcome_probability(const QubitState &state, const SymmetricPovm &povm, Outcome outcome);

struct MeasurementResult {
    QubitState state;
    double probability;
};

/// Post-measurement state M_i|psi> / sqrt(p_i). Throws std::domain_error when
/// p_i is below kMinOutcomeProbability.
MeasurementResult apply_measurement(const QubitState &state, const SymmetricPovm &povm, Outcome outcome);

/// Same update for an arbitrary Kraus operator (used for projective resets).
MeasurementResult apply_kraus(const QubitState &state, const Mat2 &kraus);

/// Outcome 0 with probability outcome_probability(state, povm, 0). Consumes
/// exactly one uniform draw.
Outcome sample_outcome(const QubitState &state, const SymmetricPovm &povm, Rng &rng);

struct BlochAngles {
    double theta;
    double phi;
};

/// Angles of sin(t/2) e^{+ip/2}|0> + cos(t/2) e^{-ip/2}|1> matching the state
/// up to global phase. phi is in [0, 2 pi) and is 0 at the poles.
BlochAngles bloch_angles(const QubitState &state);

/// Inverse of bloch_angles.
QubitState state_from_angles(double theta, double phi);

/// |<a|b>|^2.
double fidelity(const QubitState &a, const QubitState &b);

/// Wraps an angle difference into (-pi, pi].
double wrap_angle(double d);

}  // namespace unsharp

#endif
