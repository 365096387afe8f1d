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


#include "unsharp/config.h"

#include <cmath>
#include <limits>
#include <set>

namespace unsharp {

namespace {

using nlohmann::json;

// Reads keys of one JSON object and rejects the ones nobody asked for.
class Section {
   public:
    Section(const json &j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) {
            throw ConfigError(path_, "expected an object");
        }
    }

    bool has(const std::string &key) {
        seen_.insert(key);
        return j_.contains(key) && !j_.at(key).is_null();
    }

    std::string key_path(const std::string &key) const {
        return path_ + "." + key;
    }

    double number(const std::string &key, double fallback) {
        return has(key) ? as_number(key) : fallback;
    }

    double required_number(const std::string &key) {
        if (!has(key)) {
            throw ConfigError(key_path(key), "missing mandatory key");
        }
        return as_number(key);
    }

    long long integer(const std::string &key, long long fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = j_.at(key);
        if (!v.is_number_integer()) {
            throw ConfigError(key_path(key), "expected an integer");
        }
        return v.get<long long>();
    }

    uint64_t unsigned_integer(const std::string &key, uint64_t fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = j_.at(key);
        if (v.is_number_unsigned()) {
            return v.get<uint64_t>();
        }
        if (v.is_number_integer() && v.get<long long>() >= 0) {
            return static_cast<uint64_t>(v.get<long long>());
        }
        throw ConfigError(key_path(key), "expected a non-negative integer");
    }

    std::string string(const std::string &key, const std::string &fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = j_.at(key);
        if (!v.is_string()) {
            throw ConfigError(key_path(key), "expected a string");
        }
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string &key) {
        if (!has(key)) {
            throw ConfigError(key_path(key), "missing mandatory key");
        }
        const json &v = j_.at(key);
        if (!v.is_array()) {
            throw ConfigError(key_path(key), "expected an array of numbers");
        }
        std::vector<double> out;
        for (size_t i = 0; i < v.size(); i++) {
            if (!v[i].is_number()) {
                throw ConfigError(key_path(key) + "[" + std::to_string(i) + "]", "expected a number");
            }
            out.push_back(v[i].get<double>());
        }
        return out;
    }

    Section child(const std::string &key) {
        seen_.insert(key);
        static const json empty = json::object();
        if (!j_.contains(key) || j_.at(key).is_null()) {
            return Section(empty, key_path(key));
        }
        return Section(j_.at(key), key_path(key));
    }

    Section required_child(const std::string &key) {
        if (!has(key)) {
            throw ConfigError(key_path(key), "missing mandatory section");
        }
        return Section(j_.at(key), key_path(key));
    }

    void finish() const {
        for (const auto &item : j_.items()) {
            if (!seen_.count(item.key())) {
                throw ConfigError(key_path(item.key()), "unknown key");
            }
        }
    }

   private:
    double as_number(const std::string &key) const {
        const json &v = j_.at(key);
        if (!v.is_number()) {
            throw ConfigError(key_path(key), "expected a number");
        }
        double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ConfigError(key_path(key), "expected a finite number");
        }
        return d;
    }

    const json &j_;
    std::string path_;
    std::set<std::string> seen_;
};

// Runs a validation step and re-throws its message at `path`.
template <typename F>
void check_at(const std::string &path, F f) {
    try {
        f();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(path, e.what());
    }
}

int to_int(Section &s, const std::string &key, long long value) {
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        throw ConfigError(s.key_path(key), "integer out of range");
    }
    return static_cast<int>(value);
}

void read_header(Section &root, const std::string &kind) {
    long long version = root.integer("schema_version", kConfigSchemaVersion);
    if (version != kConfigSchemaVersion) {
        throw ConfigError("$.schema_version", "unsupported schema version " + std::to_string(version));
    }
    std::string k = root.string("kind", kind);
    if (k != kind) {
        throw ConfigError("$.kind", "expected '" + kind + "', got '" + k + "'");
    }
}

void read_sweep(Section &root, SweepVariable &variable, std::vector<double> &grid, SweepVariable fallback) {
    Section s = root.required_child("sweep");
    std::string v = s.string("variable", std::string(sweep_variable_name(fallback)));
    check_at(s.key_path("variable"), [&] { variable = parse_sweep_variable(v); });
    grid = s.numbers("grid");
    if (grid.empty()) {
        throw ConfigError(s.key_path("grid"), "grid is empty");
    }
    for (size_t i = 0; i < grid.size(); i++) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw ConfigError(s.key_path("grid") + "[" + std::to_string(i) + "]", "probability outside [0, 1]");
        }
    }
    s.finish();
}

int read_output(Section &root) {
    Section s = root.child("output");
    long long dump = s.integer("trajectory_dump", 0);
    if (dump < 0) {
        throw ConfigError(s.key_path("trajectory_dump"), "must be >= 0");
    }
    s.finish();
    return to_int(s, "trajectory_dump", dump);
}

json sweep_json(SweepVariable v, const std::vector<double> &grid) {
    return {{"variable", std::string(sweep_variable_name(v))}, {"grid", grid}};
}

}  // namespace

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
}

EstimationExperiment parse_estimation_experiment(const json &j) {
    Section root(j, "$");
    read_header(root, "estimation");
    EstimationExperiment e;
    EstimationConfig &c = e.config;
    {
        Section s = root.child("estimation");
        c.p0 = s.number("p0", c.p0);
        c.measurements_per_period =
            to_int(s, "measurements_per_period", s.integer("measurements_per_period", c.measurements_per_period));
        c.rabi_period = s.number("rabi_period", c.rabi_period);
        std::string conv = s.string("rabi_convention", std::string(rabi_convention_name(c.rabi_convention)));
        check_at(s.key_path("rabi_convention"), [&] { c.rabi_convention = parse_rabi_convention(conv); });
        c.measurement_duration = s.number("measurement_duration", c.measurement_duration);
        c.n_trajectories = to_int(s, "n_trajectories", s.integer("n_trajectories", c.n_trajectories));
        c.duration_periods = to_int(s, "duration_periods", s.integer("duration_periods", c.duration_periods));
        c.transient_skip_periods =
            to_int(s, "transient_skip_periods", s.integer("transient_skip_periods", c.transient_skip_periods));
        s.finish();
    }
    c.seed = root.unsigned_integer("seed", c.seed);
    {
        Section s = root.child("noise");
        c.noise.mapping.p_wrong = s.number("p_wrong", 0.0);
        c.noise.emission.p_sp = s.number("p_sp", 0.0);
        if (s.has("dephasing")) {
            Section d = s.child("dephasing");
            DephasingConfig dc;
            bool by_tau = d.has("tau_ramsey");
            bool by_beta = d.has("delta_beta");
            if (by_tau == by_beta) {
                throw ConfigError(d.key_path("delta_beta"), "give exactly one of delta_beta and tau_ramsey");
            }
            if (by_tau) {
                double tau = d.number("tau_ramsey", 0.0);
                check_at(d.key_path("tau_ramsey"), [&] { dc.delta_beta = delta_beta_from_ramsey(tau); });
            } else {
                dc.delta_beta = d.number("delta_beta", 0.0);
            }
            std::string model = d.string("model", std::string(dephasing_model_name(dc.model)));
            check_at(d.key_path("model"), [&] { dc.model = parse_dephasing_model(model); });
            dc.step_dt = d.number("step_dt", c.rabi_period / 100.0);
            check_at(d.key_path("delta_beta"), [&] { dc.validate(); });
            d.finish();
            c.noise.dephasing = dc;
        }
        check_at(s.key_path("p_wrong"), [&] { c.noise.mapping.validate(); });
        check_at(s.key_path("p_sp"), [&] { c.noise.emission.validate(); });
        s.finish();
    }
    read_sweep(root, e.variable, e.grid, SweepVariable::kPWrong);
    e.record_trajectories = read_output(root);
    root.finish();
    check_at("$.estimation", [&] { c.validate(); });
    return e;
}

PreparationExperiment parse_preparation_experiment(const json &j) {
    Section root(j, "$");
    read_header(root, "preparation");
    PreparationExperiment e;
    PreparationConfig &c = e.config;
    {
        Section s = root.child("preparation");
        c.theta_target = s.number("theta_target", c.theta_target);
        if (!(c.theta_target >= 0.0 && c.theta_target <= std::numbers::pi)) {
            throw ConfigError(s.key_path("theta_target"), "angle outside [0, pi]");
        }
        c.phi_target = s.number("phi_target", c.phi_target);
        if (!(c.phi_target >= 0.0 && c.phi_target < 2 * std::numbers::pi)) {
            throw ConfigError(s.key_path("phi_target"), "angle outside [0, 2 pi)");
        }
        c.p0 = s.number("p0", c.p0);
        c.tol_phi = s.number("tol_phi", c.tol_phi);
        c.tol_theta = s.number("tol_theta", c.tol_theta);
        c.guard_band = s.number("guard_band", c.guard_band);
        c.max_measurements = s.integer("max_measurements", c.max_measurements);
        c.n_trajectories = to_int(s, "n_trajectories", s.integer("n_trajectories", c.n_trajectories));
        s.finish();
    }
    c.seed = root.unsigned_integer("seed", c.seed);
    {
        Section s = root.child("noise");
        c.noise.mapping.p_wrong = s.number("p_wrong", 0.0);
        c.noise.emission.p_sp = s.number("p_sp", 0.0);
        check_at(s.key_path("p_wrong"), [&] { c.noise.mapping.validate(); });
        check_at(s.key_path("p_sp"), [&] { c.noise.emission.validate(); });
        s.finish();
    }
    read_sweep(root, e.variable, e.grid, SweepVariable::kPSp);
    e.record_trajectories = read_output(root);
    root.finish();
    check_at("$.preparation", [&] { c.validate(); });
    return e;
}

BudgetExperiment parse_budget_experiment(const json &j) {
    Section root(j, "$");
    read_header(root, "budget");
    BudgetExperiment e;
    if (!root.has("chain")) {
        throw ConfigError("$.chain", "missing mandatory key (metastable or dipole)");
    }
    std::string chain = root.string("chain", "");
    if (chain == "metastable") {
        e.chain = BudgetChain::kMetastable;
    } else if (chain == "dipole") {
        e.chain = BudgetChain::kDipole;
    } else {
        throw ConfigError("$.chain", "expected metastable or dipole, got '" + chain + "'");
    }
    {
        Section s = root.child("constants");
        PhysicalConstants &k = e.constants;
        k.c = s.number("c", k.c);
        k.epsilon0 = s.number("epsilon0", k.epsilon0);
        k.hbar = s.number("hbar", k.hbar);
        k.amu = s.number("amu", k.amu);
        s.finish();
        check_at("$.constants", [&] { k.validate(); });
    }
    LaserParams laser;
    {
        Section s = root.required_child("laser");
        laser.power = s.required_number("power");
        laser.spot_radius = s.required_number("spot_radius");
        laser.wavelength = s.required_number("wavelength");
        s.finish();
        check_at("$.laser", [&] { laser.validate(); });
    }
    Section ion = root.required_child("ion");
    Section extra = root.child(e.chain == BudgetChain::kMetastable ? "quoted" : "squeeze");
    if (e.chain == BudgetChain::kMetastable) {
        MetastableChainParams &p = e.metastable;
        p.laser = laser;
        p.metastable_lifetime = ion.required_number("metastable_lifetime");
        p.lamb_dicke = ion.required_number("lamb_dicke");
        p.p_sp = extra.number("p_sp", p.p_sp);
        p.quoted_delta_t = extra.number("delta_t", p.quoted_delta_t);
        ion.finish();
        extra.finish();
        check_at("$.ion", [&] { p.validate(); });
    } else {
        DipoleChainParams &p = e.dipole;
        p.laser = laser;
        p.excited_lifetime = ion.required_number("excited_lifetime");
        p.mass_amu = ion.required_number("mass_amu");
        p.stretch_mode_omega = ion.required_number("stretch_mode_omega");
        p.lamb_dicke = ion.required_number("lamb_dicke");
        p.detuning = ion.required_number("detuning");
        p.beam_wavelength = ion.number("beam_wavelength", laser.wavelength);
        p.squeeze_fraction = extra.number("fraction", p.squeeze_fraction);
        p.n_sp = extra.number("n_sp", p.n_sp);
        ion.finish();
        extra.finish();
        check_at("$.ion", [&] { p.validate(); });
    }
    root.finish();
    return e;
}

json to_json(const EstimationExperiment &e) {
    const EstimationConfig &c = e.config;
    json noise = {{"p_wrong", c.noise.mapping.p_wrong}, {"p_sp", c.noise.emission.p_sp}};
    if (c.noise.dephasing) {
        noise["dephasing"] = {{"delta_beta", c.noise.dephasing->delta_beta},
                              {"model", std::string(dephasing_model_name(c.noise.dephasing->model))},
                              {"step_dt", c.noise.dephasing->step_dt}};
    }
    return {
        {"schema_version", kConfigSchemaVersion},
        {"kind", "estimation"},
        {"seed", c.seed},
        {"estimation",
         {{"p0", c.p0},
          {"measurements_per_period", c.measurements_per_period},
          {"rabi_period", c.rabi_period},
          {"rabi_convention", std::string(rabi_convention_name(c.rabi_convention))},
          {"measurement_duration", c.measurement_duration},
          {"n_trajectories", c.n_trajectories},
          {"duration_periods", c.duration_periods},
          {"transient_skip_periods", c.transient_skip_periods}}},
        {"noise", noise},
        {"sweep", sweep_json(e.variable, e.grid)},
        {"output", {{"trajectory_dump", e.record_trajectories}}},
    };
}

json to_json(const PreparationExperiment &e) {
    const PreparationConfig &c = e.config;
    return {
        {"schema_version", kConfigSchemaVersion},
        {"kind", "preparation"},
        {"seed", c.seed},
        {"preparation",
         {{"theta_target", c.theta_target},
          {"phi_target", c.phi_target},
          {"p0", c.p0},
          {"tol_phi", c.tol_phi},
          {"tol_theta", c.tol_theta},
          {"guard_band", c.guard_band},
          {"max_measurements", c.max_measurements},
          {"n_trajectories", c.n_trajectories}}},
        {"noise", {{"p_wrong", c.noise.mapping.p_wrong}, {"p_sp", c.noise.emission.p_sp}}},
        {"sweep", sweep_json(e.variable, e.grid)},
        {"output", {{"trajectory_dump", e.record_trajectories}}},
    };
}

json to_json(const BudgetExperiment &e) {
    const PhysicalConstants &k = e.constants;
    json j = {
        {"schema_version", kConfigSchemaVersion},
        {"kind", "budget"},
        {"constants", {{"c", k.c}, {"epsilon0", k.epsilon0}, {"hbar", k.hbar}, {"amu", k.amu}}},
    };
    if (e.chain == BudgetChain::kMetastable) {
        const MetastableChainParams &p = e.metastable;
        j["chain"] = "metastable";
        j["laser"] = {{"power", p.laser.power}, {"spot_radius", p.laser.spot_radius}, {"wavelength", p.laser.wavelength}};
        j["ion"] = {{"metastable_lifetime", p.metastable_lifetime}, {"lamb_dicke", p.lamb_dicke}};
        j["quoted"] = {{"p_sp", p.p_sp}, {"delta_t", p.quoted_delta_t}};
    } else {
        const DipoleChainParams &p = e.dipole;
        j["chain"] = "dipole";
        j["laser"] = {{"power", p.laser.power}, {"spot_radius", p.laser.spot_radius}, {"wavelength", p.laser.wavelength}};
        j["ion"] = {{"excited_lifetime", p.excited_lifetime},     {"mass_amu", p.mass_amu},
                    {"stretch_mode_omega", p.stretch_mode_omega}, {"lamb_dicke", p.lamb_dicke},
                    {"detuning", p.detuning},                     {"beam_wavelength", p.beam_wavelength}};
        j["squeeze"] = {{"fraction", p.squeeze_fraction}, {"n_sp", p.n_sp}};
    }
    return j;
}

std::vector<std::pair<std::string, std::string>> estimation_config_keys() {
    return {
        {"seed", "master seed (u64); trajectory seeds derive from it"},
        {"estimation.p0", "outcome-0 weight of the unsharp z measurement, [0, 0.5] (default 0.45)"},
        {"estimation.measurements_per_period", "measurements per Rabi period (default 10)"},
        {"estimation.rabi_period", "Rabi period tau_R in s (default 0.1)"},
        {"estimation.rabi_convention", "angular: Omega = 2 pi / tau_R; inverse: Omega = 1 / tau_R (default angular)"},
        {"estimation.measurement_duration", "duration of one measurement in s, timescale check only (default 15e-6)"},
        {"estimation.n_trajectories", "trajectories per grid point (default 1000)"},
        {"estimation.duration_periods", "Rabi periods averaged after the transient (default 30)"},
        {"estimation.transient_skip_periods", "Rabi periods discarded before averaging (default 100)"},
        {"noise.p_wrong", "probability that a readout is mapped to the wrong outcome (default 0)"},
        {"noise.p_sp", "probability of a collapse to |g> or |e> per measurement (default 0)"},
        {"noise.dephasing.delta_beta", "rms of the sigma_z noise field in rad/s"},
        {"noise.dephasing.tau_ramsey", "Ramsey 1/e time in s; alternative to delta_beta"},
        {"noise.dephasing.model", "quasi-static (default) or white"},
        {"noise.dephasing.step_dt", "integration step of the white model in s (default tau_R / 100)"},
        {"sweep.variable", "p_wrong or p_sp (default p_wrong)"},
        {"sweep.grid", "values of the swept probability (mandatory, nonempty)"},
        {"output.trajectory_dump", "trajectories per grid point written to trajectories.jsonl (default 0)"},
    };
}

std::vector<std::pair<std::string, std::string>> preparation_config_keys() {
    return {
        {"seed", "master seed (u64); trajectory seeds derive from it"},
        {"preparation.theta_target", "polar angle of the target, [0, pi] (default pi/4)"},
        {"preparation.phi_target", "azimuth of the target, [0, 2 pi) (default pi/2)"},
        {"preparation.p0", "outcome-0 weight of the unsharp y and z measurements (default 0.15)"},
        {"preparation.tol_phi", "azimuth convergence tolerance in rad (default 0.05)"},
        {"preparation.tol_theta", "polar convergence tolerance in rad (default 0.05)"},
        {"preparation.guard_band", "drift beyond entry distance, in tolerances, that forces a reset (default 2)"},
        {"preparation.max_measurements", "unsharp measurements before giving up (default 2000)"},
        {"preparation.n_trajectories", "trajectories per grid point (default 1000)"},
        {"noise.p_wrong", "probability that a readout is mapped to the wrong outcome (default 0)"},
        {"noise.p_sp", "probability of a collapse to |g> or |e> per measurement (default 0)"},
        {"sweep.variable", "p_sp or p_wrong (default p_sp)"},
        {"sweep.grid", "values of the swept probability (mandatory, nonempty)"},
        {"output.trajectory_dump", "trajectories per grid point written to trajectories.jsonl (default 0)"},
    };
}

std::vector<std::pair<std::string, std::string>> budget_config_keys() {
    return {
        {"chain", "metastable (two-species sideband chain) or dipole (same-species squeeze chain); mandatory"},
        {"constants.c / epsilon0 / hbar / amu", "physical constants, CODATA 2018 by default"},
        {"laser.power", "beam power in W; mandatory"},
        {"laser.spot_radius", "beam radius in m, area pi r^2; mandatory"},
        {"laser.wavelength", "transition wavelength in m; mandatory"},
        {"ion.metastable_lifetime", "metastable chain: lifetime of the shelving level in s; mandatory"},
        {"ion.lamb_dicke", "Lamb-Dicke parameter; mandatory"},
        {"quoted.p_sp", "metastable chain: quoted decay probability per measurement (default 0.0007)"},
        {"quoted.delta_t", "metastable chain: quoted four-pulse duration in s (default 15e-6)"},
        {"ion.excited_lifetime", "dipole chain: excited-state lifetime in s; mandatory"},
        {"ion.mass_amu", "dipole chain: ion mass in u; mandatory"},
        {"ion.stretch_mode_omega", "dipole chain: stretch-mode angular frequency in rad/s; mandatory"},
        {"ion.detuning", "dipole chain: laser detuning in rad/s; mandatory"},
        {"ion.beam_wavelength", "dipole chain: wavelength of the crossed beams (default laser.wavelength)"},
        {"squeeze.fraction", "dipole chain: fraction of a full gate used per squeeze (default 0.2)"},
        {"squeeze.n_sp", "dipole chain: lifetimes entering the cumulative probability (default 23)"},
    };
}

}  // namespace unsharp
