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


#include "unsharp/budget.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace unsharp {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite and > 0");
    }
}

void require_nonnegative(double v, const char *name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
    }
}

void require_detuning(double detuning) {
    if (detuning == 0.0 || !std::isfinite(detuning)) {
        throw std::invalid_argument("detuning must be finite and nonzero");
    }
}

}  // namespace

void PhysicalConstants::validate() const {
    require_positive(c, "constants.c");
    require_positive(epsilon0, "constants.epsilon0");
    require_positive(hbar, "constants.hbar");
    require_positive(amu, "constants.amu");
}

void LaserParams::validate() const {
    require_nonnegative(power, "laser.power");
    require_positive(spot_radius, "laser.spot_radius");
    require_positive(wavelength, "laser.wavelength");
}

double field_strength(const LaserParams &laser, const PhysicalConstants &k) {
    laser.validate();
    double intensity = laser.power / (kPi * laser.spot_radius * laser.spot_radius);
    return std::sqrt(2.0 * intensity / (k.c * k.epsilon0));
}

TransitionMoment quadrupole_moment(double gamma, double omega, const PhysicalConstants &k) {
    require_nonnegative(gamma, "gamma");
    require_positive(omega, "omega");
    double w3 = omega * omega * omega;
    return TransitionMoment{
        std::sqrt(3.0 * kPi * k.c * k.epsilon0 * gamma / w3),
        std::sqrt(3.0 * kPi * k.epsilon0 * k.hbar * k.c * k.c * k.c * gamma / w3),
    };
}

double rsb_rabi_frequency(double eta, double mu, double e0, const PhysicalConstants &k) {
    return eta * mu * e0 / (4.0 * k.hbar);
}

double half_decay_measurements(double tau_sp, double delta_t) {
    require_positive(tau_sp, "tau_sp");
    require_positive(delta_t, "delta_t");
    return tau_sp / delta_t * std::log(2.0);
}

double half_decay_measurements_from_probability(double p_sp) {
    if (!(p_sp >= 0.0 && p_sp < 1.0)) {
        throw std::invalid_argument("p_sp must lie in [0, 1)");
    }
    if (p_sp == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log(0.5) / std::log1p(-p_sp);
}

double ground_state_width(double mass, double omega_s, const PhysicalConstants &k) {
    require_positive(mass, "mass");
    require_positive(omega_s, "omega_s");
    return std::sqrt(k.hbar / (2.0 * mass * omega_s));
}

double ground_state_width_from_lamb_dicke(double eta, double k_eff) {
    require_nonnegative(eta, "lamb_dicke");
    require_positive(k_eff, "k_eff");
    return eta / k_eff;
}

double stark_gradient(double mu, double e0, double k_eff, double detuning, const PhysicalConstants &k) {
    require_detuning(detuning);
    return mu * mu * e0 * e0 * k_eff / (4.0 * k.hbar * k.hbar * detuning);
}

double dipole_force(double mu, double e0, double k_eff, double detuning, const PhysicalConstants &k) {
    return k.hbar * stark_gradient(mu, e0, k_eff, detuning, k);
}

double geometric_phase(double f0, double z0, double tau_g, const PhysicalConstants &k) {
    double x = f0 * z0 * tau_g / k.hbar;
    return 0.5 * kPi * x * x;
}

double gate_time(double f0, double z0, double phi_target, const PhysicalConstants &k) {
    require_positive(f0, "f0");
    require_positive(z0, "z0");
    require_nonnegative(phi_target, "phi_target");
    return k.hbar / (f0 * z0) * std::sqrt(2.0 * phi_target / kPi);
}

double excited_population(double g, double detuning) {
    require_detuning(detuning);
    return g * g / (detuning * detuning);
}

double cumulative_sp_probability(double p_u, double n_lifetimes) {
    if (!(p_u >= 0.0 && p_u <= 1.0)) {
        throw std::invalid_argument("p_u must lie in [0, 1]");
    }
    require_nonnegative(n_lifetimes, "n_lifetimes");
    if (n_lifetimes == 0.0) {
        return 0.0;
    }
    return 1.0 - std::pow(1.0 - p_u, n_lifetimes);
}

void MetastableChainParams::validate() const {
    laser.validate();
    require_positive(metastable_lifetime, "metastable_lifetime");
    require_nonnegative(lamb_dicke, "lamb_dicke");
    if (!(p_sp > 0.0 && p_sp < 1.0)) {
        throw std::invalid_argument("p_sp must lie in (0, 1)");
    }
    require_positive(quoted_delta_t, "quoted_delta_t");
}

BudgetReport metastable_chain(const MetastableChainParams &p, const PhysicalConstants &k) {
    p.validate();
    k.validate();
    BudgetReport r;
    double intensity = p.laser.power / (kPi * p.laser.spot_radius * p.laser.spot_radius);
    double e0 = field_strength(p.laser, k);
    double gamma = 1.0 / p.metastable_lifetime;
    double omega = 2.0 * kPi * k.c / p.laser.wavelength;
    TransitionMoment mu = quadrupole_moment(gamma, omega, k);
    double rsb_printed = rsb_rabi_frequency(p.lamb_dicke, mu.printed, e0, k);
    double rsb_standard = rsb_rabi_frequency(p.lamb_dicke, mu.standard, e0, k);
    double tau_rsb = 2.0 * kPi / rsb_standard;
    double delta_t = 2.0 * tau_rsb;
    r.emplace_back("intensity", intensity);
    r.emplace_back("e0", e0);
    r.emplace_back("gamma", gamma);
    r.emplace_back("omega", omega);
    r.emplace_back("mu_printed", mu.printed);
    r.emplace_back("mu_standard", mu.standard);
    r.emplace_back("omega_rsb_printed", rsb_printed);
    r.emplace_back("omega_rsb_standard", rsb_standard);
    r.emplace_back("f_rsb_printed_hz", rsb_printed / (2.0 * kPi));
    r.emplace_back("f_rsb_standard_hz", rsb_standard / (2.0 * kPi));
    r.emplace_back("tau_rsb_standard", tau_rsb);
    r.emplace_back("delta_t", delta_t);
    r.emplace_back("n_half_delta_t", half_decay_measurements(p.metastable_lifetime, delta_t));
    r.emplace_back("p_sp_delta_t", -std::expm1(-delta_t / p.metastable_lifetime));
    r.emplace_back("quoted_delta_t", p.quoted_delta_t);
    r.emplace_back("n_half_quoted_delta_t", half_decay_measurements(p.metastable_lifetime, p.quoted_delta_t));
    r.emplace_back("p_sp_quoted_delta_t", -std::expm1(-p.quoted_delta_t / p.metastable_lifetime));
    r.emplace_back("p_sp", p.p_sp);
    r.emplace_back("n_half_p_sp", half_decay_measurements_from_probability(p.p_sp));
    return r;
}

void DipoleChainParams::validate() const {
    laser.validate();
    require_positive(excited_lifetime, "excited_lifetime");
    require_positive(mass_amu, "mass_amu");
    require_positive(stretch_mode_omega, "stretch_mode_omega");
    require_positive(lamb_dicke, "lamb_dicke");
    require_positive(beam_wavelength, "beam_wavelength");
    require_detuning(detuning);
    require_positive(squeeze_fraction, "squeeze_fraction");
    require_nonnegative(n_sp, "n_sp");
}

BudgetReport dipole_chain(const DipoleChainParams &p, const PhysicalConstants &k) {
    p.validate();
    k.validate();
    BudgetReport r;
    double e0 = field_strength(p.laser, k);
    double gamma = 1.0 / p.excited_lifetime;
    double omega = 2.0 * kPi * k.c / p.laser.wavelength;
    TransitionMoment mu = quadrupole_moment(gamma, omega, k);
    double g = mu.standard * e0 / k.hbar;
    double k_eff = 2.0 * kPi * std::numbers::sqrt2 / p.beam_wavelength;
    double z0 = ground_state_width_from_lamb_dicke(p.lamb_dicke, k_eff);
    double z0_mass = ground_state_width(p.mass_amu * k.amu, p.stretch_mode_omega, k);
    double gradient = stark_gradient(mu.standard, e0, k_eff, p.detuning, k);
    double f0 = k.hbar * gradient;
    double tau_g = gate_time(f0, z0, kPi / 2, k);
    double p_u = excited_population(g, p.detuning);
    double squeeze_time = p.squeeze_fraction * tau_g;
    double p_sp = cumulative_sp_probability(p_u, p.n_sp);
    r.emplace_back("e0", e0);
    r.emplace_back("gamma", gamma);
    r.emplace_back("omega", omega);
    r.emplace_back("mu_printed", mu.printed);
    r.emplace_back("mu_standard", mu.standard);
    r.emplace_back("g", g);
    r.emplace_back("k_eff", k_eff);
    r.emplace_back("z0", z0);
    r.emplace_back("z0_mass", z0_mass);
    r.emplace_back("stark_gradient", gradient);
    r.emplace_back("f0", f0);
    r.emplace_back("tau_g", tau_g);
    r.emplace_back("p_u", p_u);
    r.emplace_back("squeeze_time", squeeze_time);
    r.emplace_back("n_sp_computed", squeeze_time / p.excited_lifetime);
    r.emplace_back("n_sp", p.n_sp);
    r.emplace_back("p_sp", p_sp);
    r.emplace_back("n_half_p_sp", half_decay_measurements_from_probability(p_sp));
    return r;
}

double report_value(const BudgetReport &report, const std::string &key) {
    for (const auto &[name, value] : report) {
        if (name == key) {
            return value;
        }
    }
    throw std::out_of_range("budget report has no entry '" + key + "'");
}

}  // namespace unsharp
