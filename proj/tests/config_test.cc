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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace unsharp;
using nlohmann::json;

namespace {

json estimation_base() {
    return json::parse(R"({
        "schema_version": 1, "kind": "estimation", "seed": 3,
        "estimation": {"p0": 0.4, "n_trajectories": 10},
        "sweep": {"variable": "p_sp", "grid": [0.0, 0.01]}
    })");
}

json preparation_base() {
    return json::parse(R"({
        "schema_version": 1, "kind": "preparation", "seed": 4,
        "sweep": {"variable": "p_wrong", "grid": [0.0]}
    })");
}

json budget_base() {
    return json::parse(R"({
        "schema_version": 1, "kind": "budget", "chain": "metastable",
        "laser": {"power": 0.005, "spot_radius": 5e-5, "wavelength": 4.355e-7},
        "ion": {"metastable_lifetime": 0.0527, "lamb_dicke": 0.2}
    })");
}

template <typename F>
std::string error_path(F &&parse) {
    try {
        parse();
    } catch (const ConfigError &e) {
        return e.path();
    }
    return "<accepted>";
}

json load(const std::string &name) {
    std::ifstream in(std::string(UNSHARP_TEST_CONFIG_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

}  // namespace

TEST(EstimationExperiment, ParsesAndFillsDefaults) {
    EstimationExperiment e = parse_estimation_experiment(estimation_base());
    EXPECT_EQ(e.config.p0, 0.4);
    EXPECT_EQ(e.config.seed, 3u);
    EXPECT_EQ(e.config.n_trajectories, 10);
    EXPECT_EQ(e.config.measurements_per_period, EstimationConfig{}.measurements_per_period);
    EXPECT_EQ(e.variable, SweepVariable::kPSp);
    EXPECT_EQ(e.grid, (std::vector<double>{0.0, 0.01}));
    EXPECT_FALSE(e.config.noise.dephasing.has_value());
    EXPECT_EQ(e.record_trajectories, 0);
}

TEST(EstimationExperiment, DephasingSection) {
    json j = estimation_base();
    j["noise"] = {{"dephasing", {{"tau_ramsey", 2.5}}}};
    EstimationExperiment e = parse_estimation_experiment(j);
    ASSERT_TRUE(e.config.noise.dephasing.has_value());
    EXPECT_NEAR(e.config.noise.dephasing->delta_beta, 1 / (std::sqrt(2.0) * 2.5), 1e-15);
    EXPECT_EQ(e.config.noise.dephasing->model, DephasingModel::kQuasiStatic);
    EXPECT_NEAR(e.config.noise.dephasing->step_dt, e.config.rabi_period / 100, 1e-15);

    j["noise"]["dephasing"] = {{"delta_beta", 0.5}, {"model", "white"}, {"step_dt", 1e-4}};
    e = parse_estimation_experiment(j);
    EXPECT_EQ(e.config.noise.dephasing->delta_beta, 0.5);
    EXPECT_EQ(e.config.noise.dephasing->model, DephasingModel::kWhiteGaussianPerStep);

    j["noise"]["dephasing"] = {{"delta_beta", 0.5}, {"tau_ramsey", 2.5}};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.noise.dephasing.delta_beta");
    j["noise"]["dephasing"] = {{"delta_beta", 0.5}, {"model", "pink"}};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.noise.dephasing.model");
}

TEST(EstimationExperiment, ErrorsCarryKeyPaths) {
    json j = estimation_base();
    j["noise"] = {{"p_sp", 1.5}};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.noise.p_sp");

    j = estimation_base();
    j["noise"] = {{"p_sq", 0.1}};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.noise.p_sq");

    j = estimation_base();
    j["sweep"]["grid"] = json::array();
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.sweep.grid");

    j = estimation_base();
    j.erase("sweep");
    EXPECT_NE(error_path([&] { parse_estimation_experiment(j); }), "<accepted>");

    j = estimation_base();
    j["sweep"]["grid"] = {0.0, 2.0};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.sweep.grid[1]");

    j = estimation_base();
    j["sweep"]["grid"] = {0.0, "x"};
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.sweep.grid[1]");

    j = estimation_base();
    j["estimation"]["n_trajectories"] = 2.5;
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.estimation.n_trajectories");

    j = estimation_base();
    j["estimation"]["p0"] = "half";
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.estimation.p0");

    j = estimation_base();
    j["estimation"]["rabi_convention"] = "hz";
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.estimation.rabi_convention");

    j = estimation_base();
    j["schema_version"] = 2;
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.schema_version");

    j = estimation_base();
    j["kind"] = "preparation";
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.kind");

    j = estimation_base();
    j["extra"] = 1;
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.extra");

    j = estimation_base();
    j["sweep"]["variable"] = "dephasing";
    EXPECT_EQ(error_path([&] { parse_estimation_experiment(j); }), "$.sweep.variable");

    j = estimation_base();
    j["estimation"]["p0"] = 0.7;
    EXPECT_NE(error_path([&] { parse_estimation_experiment(j); }), "<accepted>");
}

TEST(PreparationExperiment, ParsesAndValidatesAngles) {
    PreparationExperiment e = parse_preparation_experiment(preparation_base());
    EXPECT_EQ(e.variable, SweepVariable::kPWrong);
    EXPECT_EQ(e.config.p0, PreparationConfig{}.p0);
    EXPECT_EQ(e.config.seed, 4u);

    json j = preparation_base();
    j["preparation"] = {{"theta_target", 3.5}};
    EXPECT_EQ(error_path([&] { parse_preparation_experiment(j); }), "$.preparation.theta_target");
    j["preparation"] = {{"phi_target", -0.1}};
    EXPECT_EQ(error_path([&] { parse_preparation_experiment(j); }), "$.preparation.phi_target");
    j["preparation"] = {{"phi_target", "east"}};
    EXPECT_EQ(error_path([&] { parse_preparation_experiment(j); }), "$.preparation.phi_target");

    j = preparation_base();
    j["noise"] = {{"dephasing", {{"delta_beta", 0.1}}}};
    EXPECT_EQ(error_path([&] { parse_preparation_experiment(j); }), "$.noise.dephasing");
}

TEST(BudgetExperiment, MandatoryKeys) {
    BudgetExperiment e = parse_budget_experiment(budget_base());
    EXPECT_EQ(e.chain, BudgetChain::kMetastable);
    EXPECT_EQ(e.metastable.p_sp, MetastableChainParams{}.p_sp);

    json j = budget_base();
    j["laser"].erase("spot_radius");
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.laser.spot_radius");

    j = budget_base();
    j.erase("chain");
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.chain");

    j = budget_base();
    j.erase("ion");
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.ion");

    j = budget_base();
    j["chain"] = "dipole";
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.ion.excited_lifetime");

    j = budget_base();
    j["ion"]["mass_amu"] = 9.0;
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.ion.mass_amu");

    j = budget_base();
    j["constants"] = {{"hbar", -1.0}};
    EXPECT_EQ(error_path([&] { parse_budget_experiment(j); }), "$.constants");
}

TEST(ParseJsonText, ReportsInvalidJson) {
    EXPECT_EQ(error_path([] { parse_json_text("{\"a\": "); }), "$");
    EXPECT_EQ(parse_json_text("{\"a\": 1}")["a"], 1);
}

TEST(ToJson, ResolvedConfigsRoundTrip) {
    for (const char *name : {"estimation_p_wrong.json", "estimation_p_sp.json", "estimation_dephasing.json"}) {
        EstimationExperiment e = parse_estimation_experiment(load(name));
        json resolved = to_json(e);
        EXPECT_EQ(to_json(parse_estimation_experiment(resolved)), resolved) << name;
    }
    for (const char *name : {"preparation_p_sp.json", "preparation_p_wrong.json"}) {
        PreparationExperiment e = parse_preparation_experiment(load(name));
        json resolved = to_json(e);
        EXPECT_EQ(to_json(parse_preparation_experiment(resolved)), resolved) << name;
    }
    for (const char *name : {"budget_metastable.json", "budget_dipole.json"}) {
        BudgetExperiment e = parse_budget_experiment(load(name));
        json resolved = to_json(e);
        EXPECT_EQ(to_json(parse_budget_experiment(resolved)), resolved) << name;
    }
}

TEST(ShippedConfigs, MatchLibraryDefaults) {
    BudgetExperiment d = parse_budget_experiment(load("budget_dipole.json"));
    DipoleChainParams def;
    EXPECT_DOUBLE_EQ(d.dipole.detuning, def.detuning);
    EXPECT_DOUBLE_EQ(d.dipole.stretch_mode_omega, def.stretch_mode_omega);
    EstimationExperiment e = parse_estimation_experiment(load("estimation_p_wrong.json"));
    EXPECT_EQ(e.config.n_trajectories, 1000);
    EXPECT_EQ(e.grid.front(), 0.0);
}

TEST(ConfigKeys, HelpListsAreComplete) {
    auto has = [](const auto &keys, const std::string &k) {
        for (const auto &[name, doc] : keys) {
            if (name == k) {
                return !doc.empty();
            }
        }
        return false;
    };
    EXPECT_TRUE(has(estimation_config_keys(), "noise.dephasing.tau_ramsey"));
    EXPECT_TRUE(has(estimation_config_keys(), "sweep.grid"));
    EXPECT_TRUE(has(preparation_config_keys(), "preparation.guard_band"));
    EXPECT_TRUE(has(budget_config_keys(), "laser.spot_radius"));
}
