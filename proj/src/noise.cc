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


#include "unsharp/noise.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unsharp {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

Mat2 step_propagator(double rabi, double beta, double dt) {
    return exp_pauli(0.5 * rabi * dt, 0.0, beta * dt);
}

}  // namespace

std::string_view dephasing_model_name(DephasingModel model) {
    return model == DephasingModel::kQuasiStatic ? "quasi-static" : "white";
}

DephasingModel parse_dephasing_model(std::string_view name) {
    if (name == "quasi-static") {
        return DephasingModel::kQuasiStatic;
    }
    if (name == "white") {
        return DephasingModel::kWhiteGaussianPerStep;
    }
    throw std::invalid_argument("unknown dephasing model '" + std::string(name) + "' (expected quasi-static or white)");
}

void DephasingConfig::validate() const {
    if (!(delta_beta >= 0.0) || !std::isfinite(delta_beta)) {
        throw std::invalid_argument("delta_beta must be finite and >= 0");
    }
    if (!(step_dt > 0.0) || !std::isfinite(step_dt)) {
        throw std::invalid_argument("step_dt must be finite and > 0");
    }
}

void MappingErrorConfig::validate() const {
    check_probability(p_wrong, "p_wrong");
}

void SpontaneousEmissionConfig::validate() const {
    check_probability(p_sp, "p_sp");
}

std::string_view rabi_convention_name(RabiConvention convention) {
    return convention == RabiConvention::kAngular ? "angular" : "inverse";
}

RabiConvention parse_rabi_convention(std::string_view name) {
    if (name == "angular") {
        return RabiConvention::kAngular;
    }
    if (name == "inverse") {
        return RabiConvention::kInverse;
    }
    throw std::invalid_argument("unknown rabi convention '" + std::string(name) + "' (expected angular or inverse)");
}

double rabi_frequency(double tau_r, RabiConvention convention) {
    if (!(tau_r > 0.0)) {
        throw std::invalid_argument("rabi period must be > 0");
    }
    return convention == RabiConvention::kAngular ? 2 * std::numbers::pi / tau_r : 1.0 / tau_r;
}

double ramsey_coherence(double delta_beta, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("ramsey_coherence: t must be >= 0");
    }
    return std::exp(-2.0 * delta_beta * delta_beta * t * t);
}

double delta_beta_from_ramsey(double tau_ramsey) {
    if (!(tau_ramsey > 0.0)) {
        throw std::invalid_argument("delta_beta_from_ramsey: tau must be > 0");
    }
    if (std::isinf(tau_ramsey)) {
        return 0.0;
    }
    return 1.0 / (std::numbers::sqrt2 * tau_ramsey);
}

Mat2 rabi_propagator(double rabi, double t) {
    return step_propagator(rabi, 0.0, t);
}

DephasingProcess::DephasingProcess(const DephasingConfig &cfg, Rng &rng) : cfg_(cfg) {
    cfg_.validate();
    if (cfg_.model == DephasingModel::kQuasiStatic) {
        static_beta_ = cfg_.delta_beta * rng.normal();
    }
}

QubitState DephasingProcess::evolve(const QubitState &state, double rabi, double duration, Rng &rng) const {
    if (!(duration >= 0.0)) {
        throw std::invalid_argument("evolve: duration must be >= 0");
    }
    if (cfg_.model == DephasingModel::kQuasiStatic || cfg_.delta_beta == 0.0) {
        // Constant Hamiltonian over the whole interval.
        return state.evolved(step_propagator(rabi, static_beta_, duration));
    }
    // Full steps, then one short step for the remainder.
    double ratio = duration / cfg_.step_dt;
    auto full = static_cast<long long>(std::floor(ratio * (1 + 4 * std::numeric_limits<double>::epsilon())));
    double rest = duration - static_cast<double>(full) * cfg_.step_dt;
    QubitState s = state;
    for (long long k = 0; k < full; k++) {
        s = s.evolved(step_propagator(rabi, cfg_.delta_beta * rng.normal(), cfg_.step_dt));
    }
    if (rest > 1e-12 * cfg_.step_dt) {
        s = s.evolved(step_propagator(rabi, cfg_.delta_beta * rng.normal(), rest));
    }
    return s;
}

QubitState evolve_with_dephasing(const QubitState &state, double rabi, const DephasingConfig &cfg, double duration,
                                 Rng &rng) {
    DephasingProcess process(cfg, rng);
    return process.evolve(state, rabi, duration, rng);
}

Outcome flip_outcome(Outcome outcome, const MappingErrorConfig &cfg, Rng &rng) {
    return rng.uniform() < cfg.p_wrong ? flipped(outcome) : outcome;
}

CollapseResult spontaneous_collapse(const QubitState &state, const SpontaneousEmissionConfig &cfg, Rng &rng) {
    double u_collapse = rng.uniform();
    double u_level = rng.uniform();
    if (u_collapse < cfg.p_sp) {
        return {u_level < 0.5 ? QubitState::ground() : QubitState::excited(), true};
    }
    return {state, false};
}

}  // namespace unsharp
