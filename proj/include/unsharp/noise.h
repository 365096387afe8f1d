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


// Error channels applied to trajectories: classical dephasing during the
// driven evolution, wrong readout mapping, and collapse by spontaneous emission.

#ifndef UNSHARP_NOISE_H
#define UNSHARP_NOISE_H

#include <optional>
#include <string_view>

#include "unsharp/qubit.h"
#include "unsharp/rng.h"

namespace unsharp {

enum class DephasingModel {
    /// beta drawn once per trajectory and held. Its ensemble coherence is
    /// exactly exp(-2 delta_beta^2 t^2) at all times.
    kQuasiStatic,
    /// Fresh beta for every step of length step_dt. The ensemble decay is then
    /// exponential with rate 2 delta_beta^2 step_dt, not Gaussian.
    kWhiteGaussianPerStep,
};

std::string_view dephasing_model_name(DephasingModel model);
/// Accepts "quasi-static" and "white". Throws std::invalid_argument otherwise.
DephasingModel parse_dephasing_model(std::string_view name);

struct DephasingConfig {
    /// rms of beta(t) in H = beta(t) Z, rad/s.
    double delta_beta = 0.0;
    DephasingModel model = DephasingModel::kQuasiStatic;
    /// Integration step, s. Only the white model draws per step.
    double step_dt = 1e-3;

    void validate() const;
};

struct MappingErrorConfig {
    double p_wrong = 0.0;

    void validate() const;
};

struct SpontaneousEmissionConfig {
    double p_sp = 0.0;

    void validate() const;
};

/// How a Rabi period maps to the drive frequency.
enum class RabiConvention {
    /// Omega_R = 2 pi / tau_R.
    kAngular,
    /// Omega_R = 1 / tau_R.
    kInverse,
};

std::string_view rabi_convention_name(RabiConvention convention);
/// Accepts "angular" and "inverse".
RabiConvention parse_rabi_convention(std::string_view name);
double rabi_frequency(double tau_r, RabiConvention convention);

/// exp(-2 delta_beta^2 t^2).
double ramsey_coherence(double delta_beta, double t);

/// 1 / (sqrt2 tau). Infinite tau gives 0.
double delta_beta_from_ramsey(double tau_ramsey);

/// Noise realization of one trajectory. For the quasi-static model the value
/// of beta is drawn at construction; the white model draws at every step.
class DephasingProcess {
   public:
    DephasingProcess(const DephasingConfig &cfg, Rng &rng);

    /// Evolves under H = (rabi/2) X + beta Z for `duration` seconds, each step
    /// an exact 2x2 propagator.
    QubitState evolve(const QubitState &state, double rabi, double duration, Rng &rng) const;

    /// The held beta of the quasi-static model (0 for the white model).
    double static_beta() const {
        return static_beta_;
    }

   private:
    DephasingConfig cfg_;
    double static_beta_ = 0.0;
};

/// One-shot form: a new DephasingProcess per call.
QubitState evolve_with_dephasing(const QubitState &state, double rabi, const DephasingConfig &cfg, double duration,
                                 Rng &rng);

/// Noiseless propagator exp(-i t (rabi/2) X).
Mat2 rabi_propagator(double rabi, double t);

/// Consumes one uniform draw.
Outcome flip_outcome(Outcome outcome, const MappingErrorConfig &cfg, Rng &rng);

struct CollapseResult {
    QubitState state;
    bool collapsed;
};

/// With probability p_sp replaces the state by |g> or |e> (equal odds).
/// Always consumes two uniform draws so the random stream does not depend on
/// p_sp.
CollapseResult spontaneous_collapse(const QubitState &state, const SpontaneousEmissionConfig &cfg, Rng &rng);

}  // namespace unsharp

#endif
