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


// Exercises the shared library through its C header only.

#include "unsharp/unsharp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

std::string take(unsharp_buffer *b) {
    std::string s(unsharp_buffer_data(b), unsharp_buffer_size(b));
    unsharp_buffer_destroy(b);
    return s;
}

const char *kEstimation = R"({
    "schema_version": 1, "kind": "estimation", "seed": 5,
    "estimation": {"n_trajectories": 20, "duration_periods": 3, "transient_skip_periods": 2},
    "sweep": {"variable": "p_wrong", "grid": [0.0, 0.1]},
    "output": {"trajectory_dump": 1}
})";

const char *kPreparation = R"({
    "schema_version": 1, "kind": "preparation", "seed": 6,
    "preparation": {"n_trajectories": 30},
    "sweep": {"variable": "p_sp", "grid": [0.0]}
})";

}  // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(unsharp_version(), "0.1.0");
    EXPECT_STREQ(unsharp_status_name(UNSHARP_OK), "ok");
    EXPECT_STRNE(unsharp_status_name(UNSHARP_ERR_CONFIG), unsharp_status_name(UNSHARP_ERR_DOMAIN));
}

TEST(CApi, PovmRoundTrip) {
    unsharp_povm *p = nullptr;
    ASSERT_EQ(unsharp_povm_create(0.45, 0.0, 0.0, &p), UNSHARP_OK);
    double dp = 0;
    ASSERT_EQ(unsharp_povm_sharpness(p, &dp), UNSHARP_OK);
    EXPECT_NEAR(dp, 0.1, 1e-15);
    double m0[8];
    double m1[8];
    ASSERT_EQ(unsharp_povm_matrices(p, m0, m1), UNSHARP_OK);
    EXPECT_NEAR(m0[0], std::sqrt(0.45), 1e-15);
    EXPECT_NEAR(m0[6], std::sqrt(0.55), 1e-15);
    EXPECT_EQ(m0[2], 0.0);

    double ground[4] = {1, 0, 0, 0};
    double prob = 0;
    ASSERT_EQ(unsharp_outcome_probability(p, ground, 0, &prob), UNSHARP_OK);
    EXPECT_NEAR(prob, 0.45, 1e-15);

    double plus[4] = {1, 0, 1, 0};
    double post[4];
    ASSERT_EQ(unsharp_apply_measurement(p, plus, 0, post, &prob), UNSHARP_OK);
    EXPECT_NEAR(prob, 0.5, 1e-15);
    EXPECT_NEAR(post[0], std::sqrt(0.45), 1e-12);
    EXPECT_NEAR(post[2], std::sqrt(0.55), 1e-12);

    unsharp_rng *rng = nullptr;
    ASSERT_EQ(unsharp_rng_create(1, &rng), UNSHARP_OK);
    int zeros = 0;
    for (int k = 0; k < 20000; k++) {
        int o = -1;
        ASSERT_EQ(unsharp_sample_outcome(p, ground, rng, &o), UNSHARP_OK);
        zeros += o == 0;
    }
    EXPECT_NEAR(zeros / 20000.0, 0.45, 0.015);
    unsharp_rng_destroy(rng);
    unsharp_povm_destroy(p);
}

TEST(CApi, ErrorsAreReportedNotThrown) {
    unsharp_povm *p = nullptr;
    EXPECT_EQ(unsharp_povm_create(0.7, 0.0, 0.0, &p), UNSHARP_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(p, nullptr);
    EXPECT_NE(std::string(unsharp_last_error()).find("p0"), std::string::npos);
    EXPECT_EQ(unsharp_povm_create(0.3, 0.0, 0.0, nullptr), UNSHARP_ERR_NULL);

    ASSERT_EQ(unsharp_povm_create(0.0, 0.0, 0.0, &p), UNSHARP_OK);
    double ground[4] = {1, 0, 0, 0};
    double post[4];
    double prob;
    EXPECT_EQ(unsharp_apply_measurement(p, ground, 0, post, &prob), UNSHARP_ERR_DOMAIN);
    EXPECT_EQ(unsharp_apply_measurement(p, ground, 2, post, &prob), UNSHARP_ERR_INVALID_ARGUMENT);
    double zero[4] = {0, 0, 0, 0};
    EXPECT_EQ(unsharp_outcome_probability(p, zero, 0, &prob), UNSHARP_ERR_INVALID_ARGUMENT);
    unsharp_povm_destroy(p);
    unsharp_povm_destroy(nullptr);
    unsharp_buffer_destroy(nullptr);
}

TEST(CApi, CompileSerializeVerify) {
    unsharp_program *prog = nullptr;
    ASSERT_EQ(unsharp_compile(1, 0.45, 0.0, 0.0, &prog), UNSHARP_OK);
    size_t n = 0;
    ASSERT_EQ(unsharp_program_pulse_count(prog, &n), UNSHARP_OK);
    EXPECT_EQ(n, 4u);
    unsharp_buffer *text = nullptr;
    ASSERT_EQ(unsharp_program_serialize(prog, &text), UNSHARP_OK);
    std::string s = take(text);
    EXPECT_EQ(s.rfind("1 0.45000000000000001 0 0\n", 0), 0u);

    unsharp_program *again = nullptr;
    ASSERT_EQ(unsharp_program_parse(s.c_str(), &again), UNSHARP_OK);
    ASSERT_EQ(unsharp_program_serialize(again, &text), UNSHARP_OK);
    EXPECT_EQ(take(text), s);

    double dev = 1;
    int zero_info = -1;
    unsharp_buffer *report = nullptr;
    ASSERT_EQ(unsharp_program_verify(prog, &dev, &zero_info, &report), UNSHARP_OK);
    EXPECT_LT(dev, 1e-10);
    EXPECT_EQ(zero_info, 0);
    EXPECT_NE(take(report).find("max_deviation"), std::string::npos);
    unsharp_program_destroy(again);
    unsharp_program_destroy(prog);

    ASSERT_EQ(unsharp_compile(2, 0.45, 0.0, 0.0, &prog), UNSHARP_OK);
    ASSERT_EQ(unsharp_program_verify(prog, &dev, nullptr, &report), UNSHARP_OK);
    EXPECT_LT(dev, 1e-12);
    std::string r2 = take(report);
    EXPECT_NE(r2.find("chi"), std::string::npos);
    unsharp_program_destroy(prog);

    EXPECT_EQ(unsharp_compile(2, 0.45, 1.0, 0.0, &prog), UNSHARP_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(unsharp_compile(3, 0.45, 0.0, 0.0, &prog), UNSHARP_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(unsharp_program_parse("1 0.2 0 0\nfoo g-r 1 0\n", &prog), UNSHARP_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(unsharp_last_error()).find("line 2"), std::string::npos);
}

TEST(CApi, EstimationSweep) {
    unsharp_sweep *a = nullptr;
    unsharp_sweep *b = nullptr;
    ASSERT_EQ(unsharp_estimation_run(kEstimation, 1, &a), UNSHARP_OK);
    ASSERT_EQ(unsharp_estimation_run(kEstimation, 4, &b), UNSHARP_OK);
    unsharp_buffer *csv = nullptr;
    ASSERT_EQ(unsharp_sweep_csv(a, 0, &csv), UNSHARP_OK);
    std::string ca = take(csv);
    ASSERT_EQ(unsharp_sweep_csv(b, 0, &csv), UNSHARP_OK);
    EXPECT_EQ(ca, take(csv));
    EXPECT_EQ(unsharp_sweep_csv(a, 1, &csv), UNSHARP_ERR_INVALID_ARGUMENT);

    size_t n = 0;
    ASSERT_EQ(unsharp_sweep_size(a, &n), UNSHARP_OK);
    EXPECT_EQ(n, 2u);
    double g, f, fe, c, ce;
    ASSERT_EQ(unsharp_sweep_point(a, 1, &g, &f, &fe, &c, &ce), UNSHARP_OK);
    EXPECT_EQ(g, 0.1);
    EXPECT_GT(f, 0.0);
    EXPECT_EQ(unsharp_sweep_point(a, 2, &g, &f, &fe, &c, &ce), UNSHARP_ERR_INVALID_ARGUMENT);

    unsharp_buffer *traj = nullptr;
    ASSERT_EQ(unsharp_sweep_trajectories(a, &traj), UNSHARP_OK);
    std::string t = take(traj);
    EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 2);

    unsharp_buffer *cfg = nullptr;
    ASSERT_EQ(unsharp_sweep_config(a, &cfg), UNSHARP_OK);
    EXPECT_NE(take(cfg).find("\"measurements_per_period\""), std::string::npos);
    unsharp_buffer *warn = nullptr;
    ASSERT_EQ(unsharp_sweep_warnings(a, &warn), UNSHARP_OK);
    take(warn);
    unsharp_sweep_destroy(a);
    unsharp_sweep_destroy(b);
}

TEST(CApi, PreparationSweepHasTwoTables) {
    unsharp_sweep *s = nullptr;
    ASSERT_EQ(unsharp_preparation_run(kPreparation, 2, &s), UNSHARP_OK);
    unsharp_buffer *csv = nullptr;
    ASSERT_EQ(unsharp_sweep_csv(s, 1, &csv), UNSHARP_OK);
    EXPECT_EQ(take(csv).rfind("grid_value,mean_count_total", 0), 0u);
    unsharp_sweep_destroy(s);
}

TEST(CApi, ConfigErrorsCarryKeyPath) {
    unsharp_sweep *s = nullptr;
    const char *bad = R"({"schema_version": 1, "kind": "estimation", "sweep": {"variable": "p_wrong", "grid": []}})";
    EXPECT_EQ(unsharp_estimation_run(bad, 1, &s), UNSHARP_ERR_CONFIG);
    EXPECT_EQ(std::string(unsharp_last_error()).rfind("$.sweep.grid", 0), 0u);
    EXPECT_EQ(unsharp_estimation_run("not json", 1, &s), UNSHARP_ERR_CONFIG);
    EXPECT_EQ(unsharp_estimation_run(nullptr, 1, &s), UNSHARP_ERR_NULL);
}

TEST(CApi, BudgetAndHelp) {
    const char *cfg = R"({"schema_version": 1, "kind": "budget", "chain": "metastable",
        "laser": {"power": 0.005, "spot_radius": 5e-5, "wavelength": 4.355e-7},
        "ion": {"metastable_lifetime": 0.0527, "lamb_dicke": 0.2}})";
    unsharp_buffer *kv = nullptr;
    unsharp_buffer *js = nullptr;
    ASSERT_EQ(unsharp_budget_run(cfg, &kv, &js), UNSHARP_OK);
    std::string k = take(kv);
    EXPECT_NE(k.find("e0=21901"), std::string::npos);
    EXPECT_NE(take(js).find("\"n_half_p_sp\""), std::string::npos);
    ASSERT_EQ(unsharp_budget_run(cfg, nullptr, nullptr), UNSHARP_OK);

    unsharp_buffer *help = nullptr;
    ASSERT_EQ(unsharp_config_help("budget", &help), UNSHARP_OK);
    EXPECT_NE(take(help).find("laser.spot_radius"), std::string::npos);
    EXPECT_EQ(unsharp_config_help("plot", &help), UNSHARP_ERR_INVALID_ARGUMENT);
}
