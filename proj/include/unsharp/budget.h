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


// Order-of-magnitude error budgets for the two realizations. All inputs and
// outputs are SI: W, m, s, rad/s, V/m, C m, N.

#ifndef UNSHARP_BUDGET_H
#define UNSHARP_BUDGET_H

#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace unsharp {

/// CODATA 2018 exact or recommended values.
struct PhysicalConstants {
    double c = 299792458.0;
    double epsilon0 = 8.8541878128e-12;
    double hbar = 1.054571817e-34;
    /// Unified atomic mass unit, kg.
    double amu = 1.66053906660e-27;

    void validate() const;
};

struct LaserParams {
    double power = 5e-3;
    /// The beam area is pi * spot_radius^2.
    double spot_radius = 50e-6;
    double wavelength = 435.5e-9;

    void validate() const;
};

/// V/m, from I = power / (pi r^2) and E0 = sqrt(2 I / (c eps0)).
double field_strength(const LaserParams &laser, const PhysicalConstants &k);

struct TransitionMoment {
    /// sqrt(3 pi c eps0 gamma / omega^3), evaluated exactly as printed.
    double printed;
    /// sqrt(3 pi eps0 hbar c^3 gamma / omega^3), C m.
    double standard;
};

TransitionMoment quadrupole_moment(double gamma, double omega, const PhysicalConstants &k);

/// eta mu E0 / (4 hbar), rad/s.
double rsb_rabi_frequency(double eta, double mu, double e0, const PhysicalConstants &k);

/// (tau_sp / delta_t) ln 2.
double half_decay_measurements(double tau_sp, double delta_t);

/// ln 0.5 / ln(1 - p_sp). Infinite at p_sp = 0.
double half_decay_measurements_from_probability(double p_sp);

/// sqrt(hbar / (2 m omega_s)).
double ground_state_width(double mass, double omega_s, const PhysicalConstants &k);

/// eta / k_eff.
double ground_state_width_from_lamb_dicke(double eta, double k_eff);

/// mu^2 E0^2 k_eff / (4 hbar^2 detuning), in 1/(s m). Throws for zero detuning.
double stark_gradient(double mu, double e0, double k_eff, double detuning, const PhysicalConstants &k);

/// hbar * stark_gradient.
double dipole_force(double mu, double e0, double k_eff, double detuning, const PhysicalConstants &k);

/// (pi/2) (F0 z0 tau_g / hbar)^2.
double geometric_phase(double f0, double z0, double tau_g, const PhysicalConstants &k);

/// Inverse of geometric_phase; phi_target = pi/2 gives hbar / (F0 z0).
double gate_time(double f0, double z0, double phi_target, const PhysicalConstants &k);

/// g^2 / detuning^2. Throws for zero detuning.
double excited_population(double g, double detuning);

/// 1 - (1 - p_u)^n.
double cumulative_sp_probability(double p_u, double n_lifetimes);

/// Ordered name/value list of every intermediate of a chain.
using BudgetReport = std::vector<std::pair<std::string, double>>;

/// Two-species chain: field, transition moment, sideband Rabi frequency, the
/// four-pulse duration and the number of measurements before a 50% chance of
/// decay from the metastable level.
struct MetastableChainParams {
    LaserParams laser;
    double metastable_lifetime = 52.7e-3;
    double lamb_dicke = 0.2;
    /// Per-measurement decay probability quoted alongside the chain.
    double p_sp = 0.0007;
    /// Four-pulse duration quoted alongside the chain, s.
    double quoted_delta_t = 15e-6;

    void validate() const;
};

BudgetReport metastable_chain(const MetastableChainParams &params, const PhysicalConstants &k);

/// Same-species chain: off-resonant dipole force, gate time, excited-state
/// admixture and the accumulated scattering probability of a weak squeeze.
struct DipoleChainParams {
    /// wavelength is the dipole transition used for the field and the moment.
    LaserParams laser{5e-3, 50e-6, 313e-9};
    /// Lifetime of the excited state of the dipole transition.
    double excited_lifetime = 8.2e-9;
    double mass_amu = 9.012182;
    double stretch_mode_omega = 2 * std::numbers::pi * 6e6;
    double lamb_dicke = 0.2;
    /// Wavelength of the interfering beams; k_eff = 2 pi sqrt2 / wavelength.
    double beam_wavelength = 313e-9;
    double detuning = 2 * std::numbers::pi * 82e9;
    /// Fraction of a full gate used for one weak squeeze.
    double squeeze_fraction = 0.2;
    /// Number of lifetimes used for the cumulative probability.
    double n_sp = 23;

    void validate() const;
};

BudgetReport dipole_chain(const DipoleChainParams &params, const PhysicalConstants &k);

/// Looks up a key of a report; throws std::out_of_range if absent.
double report_value(const BudgetReport &report, const std::string &key);

}  // namespace unsharp

#endif
