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


#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "unsharp/budget.h"
#include "unsharp/config.h"
#include "unsharp/estimation.h"
#include "unsharp/pulse.h"
#include "unsharp/qubit.h"
#include "unsharp/scheme1.h"
#include "unsharp/scheme2.h"
#include "unsharp/sweep.h"
#include "unsharp/unsharp.h"
#include "unsharp/verify.h"

#ifndef UNSHARP_VERSION_STRING
#define UNSHARP_VERSION_STRING "0.0.0"
#endif

struct unsharp_buffer {
    std::string data;
};

struct unsharp_povm {
    unsharp::SymmetricPovm povm;
};

struct unsharp_rng {
    unsharp::Rng rng;
};

struct unsharp_program {
    unsharp::PulseProgram program;
};

struct unsharp_sweep {
    unsharp::SweepResult result;
    nlohmann::json config;
    bool preparation;
    std::string warnings;
};

namespace {

thread_local std::string last_error;

unsharp_status fail(unsharp_status status, const std::string &message) {
    last_error = message;
    return status;
}

template <typename F>
unsharp_status guarded(F f) {
    try {
        f();
        return UNSHARP_OK;
    } catch (const unsharp::ConfigError &e) {
        return fail(UNSHARP_ERR_CONFIG, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(UNSHARP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(UNSHARP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(UNSHARP_ERR_DOMAIN, e.what());
    } catch (const std::exception &e) {
        return fail(UNSHARP_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(UNSHARP_ERR_RUNTIME, "unknown error");
    }
}

#define REQUIRE(ptr)                                                       \
    do {                                                                   \
        if ((ptr) == nullptr) {                                            \
            return fail(UNSHARP_ERR_NULL, "argument '" #ptr "' is NULL"); \
        }                                                                  \
    } while (0)

unsharp::QubitState state_in(const double s[4]) {
    return unsharp::QubitState(unsharp::Complex(s[0], s[1]), unsharp::Complex(s[2], s[3]));
}

void state_out(const unsharp::QubitState &s, double out[4]) {
    out[0] = s.amp_g().real();
    out[1] = s.amp_g().imag();
    out[2] = s.amp_e().real();
    out[3] = s.amp_e().imag();
}

void matrix_out(const unsharp::Mat2 &m, double out[8]) {
    for (size_t k = 0; k < 4; k++) {
        out[2 * k] = m.a[k].real();
        out[2 * k + 1] = m.a[k].imag();
    }
}

unsharp::Outcome outcome_in(int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    return static_cast<unsharp::Outcome>(outcome);
}

unsharp_buffer *make_buffer(std::string s) {
    return new unsharp_buffer{std::move(s)};
}

std::string timescale_warnings(const unsharp::EstimationConfig &cfg) {
    unsharp::TimescaleReport r = unsharp::check_timescales(cfg);
    std::ostringstream out;
    out.precision(6);
    for (const auto &w : r.warnings) {
        out << "timescale: " << w << " (tau_meas=" << r.tau_meas << " s, tau_R=" << r.tau_r
            << " s, tau_m=" << r.tau_m << " s, tau_N=" << r.tau_n << " s)\n";
    }
    return out.str();
}

}  // namespace

extern "C" {

const char *unsharp_version(void) {
    return UNSHARP_VERSION_STRING;
}

const char *unsharp_last_error(void) {
    return last_error.c_str();
}

const char *unsharp_status_name(unsharp_status status) {
    switch (status) {
        case UNSHARP_OK:
            return "ok";
        case UNSHARP_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case UNSHARP_ERR_DOMAIN:
            return "domain error";
        case UNSHARP_ERR_CONFIG:
            return "configuration error";
        case UNSHARP_ERR_NULL:
            return "null argument";
        case UNSHARP_ERR_RUNTIME:
            return "runtime error";
    }
    return "unknown status";
}

const char *unsharp_buffer_data(const unsharp_buffer *buffer) {
    return buffer == nullptr ? "" : buffer->data.c_str();
}

size_t unsharp_buffer_size(const unsharp_buffer *buffer) {
    return buffer == nullptr ? 0 : buffer->data.size();
}

void unsharp_buffer_destroy(unsharp_buffer *buffer) {
    delete buffer;
}

unsharp_status unsharp_povm_create(double p0, double theta, double phi, unsharp_povm **out) {
    REQUIRE(out);
    return guarded([&] {
        *out = new unsharp_povm{unsharp::build_symmetric_povm(p0, unsharp::MeasurementAxis(theta, phi))};
    });
}

void unsharp_povm_destroy(unsharp_povm *povm) {
    delete povm;
}

unsharp_status unsharp_povm_matrices(const unsharp_povm *povm, double m0[8], double m1[8]) {
    REQUIRE(povm);
    REQUIRE(m0);
    REQUIRE(m1);
    matrix_out(povm->povm.m0, m0);
    matrix_out(povm->povm.m1, m1);
    return UNSHARP_OK;
}

unsharp_status unsharp_povm_sharpness(const unsharp_povm *povm, double *delta_p) {
    REQUIRE(povm);
    REQUIRE(delta_p);
    *delta_p = povm->povm.delta_p;
    return UNSHARP_OK;
}

unsharp_status unsharp_outcome_probability(const unsharp_povm *povm, const double state[4], int outcome,
                                           double *probability) {
    REQUIRE(povm);
    REQUIRE(state);
    REQUIRE(probability);
    return guarded([&] {
        *probability = unsharp::outcome_probability(state_in(state), povm->povm, outcome_in(outcome));
    });
}

unsharp_status unsharp_apply_measurement(const unsharp_povm *povm, const double state[4], int outcome,
                                         double post_state[4], double *probability) {
    REQUIRE(povm);
    REQUIRE(state);
    REQUIRE(post_state);
    return guarded([&] {
        unsharp::MeasurementResult r = unsharp::apply_measurement(state_in(state), povm->povm, outcome_in(outcome));
        state_out(r.state, post_state);
        if (probability != nullptr) {
            *probability = r.probability;
        }
    });
}

unsharp_status unsharp_rng_create(uint64_t seed, unsharp_rng **out) {
    REQUIRE(out);
    return guarded([&] { *out = new unsharp_rng{unsharp::Rng(seed)}; });
}

void unsharp_rng_destroy(unsharp_rng *rng) {
    delete rng;
}

unsharp_status unsharp_sample_outcome(const unsharp_povm *povm, const double state[4], unsharp_rng *rng,
                                      int *outcome) {
    REQUIRE(povm);
    REQUIRE(state);
    REQUIRE(rng);
    REQUIRE(outcome);
    return guarded([&] { *outcome = unsharp::index_of(unsharp::sample_outcome(state_in(state), povm->povm, rng->rng)); });
}

unsharp_status unsharp_compile(int scheme, double p0, double theta, double phi, unsharp_program **out) {
    REQUIRE(out);
    return guarded([&] {
        unsharp::MeasurementAxis axis(theta, phi);
        unsharp::build_symmetric_povm(p0, axis);
        if (scheme == 1) {
            *out = new unsharp_program{unsharp::compile_scheme1(p0, axis)};
        } else if (scheme == 2) {
            if (!axis.is_z()) {
                throw std::invalid_argument("scheme 2 realizes z-axis measurements only (theta must be 0)");
            }
            double chi = 0.5 * std::asin(1.0 - 2.0 * p0);
            *out = new unsharp_program{unsharp::compile_scheme2(chi)};
        } else {
            throw std::invalid_argument("scheme must be 1 or 2");
        }
    });
}

unsharp_status unsharp_program_parse(const char *text, unsharp_program **out) {
    REQUIRE(text);
    REQUIRE(out);
    return guarded([&] { *out = new unsharp_program{unsharp::parse_program(text)}; });
}

void unsharp_program_destroy(unsharp_program *program) {
    delete program;
}

unsharp_status unsharp_program_serialize(const unsharp_program *program, unsharp_buffer **out) {
    REQUIRE(program);
    REQUIRE(out);
    return guarded([&] { *out = make_buffer(unsharp::serialize_program(program->program)); });
}

unsharp_status unsharp_program_pulse_count(const unsharp_program *program, size_t *count) {
    REQUIRE(program);
    REQUIRE(count);
    *count = program->program.pulses.size();
    return UNSHARP_OK;
}

unsharp_status unsharp_program_verify(const unsharp_program *program, double *max_deviation, int *zero_information,
                                      unsharp_buffer **report) {
    REQUIRE(program);
    return guarded([&] {
        const unsharp::PulseProgram &p = program->program;
        unsharp::VerificationReport r =
            unsharp::verify_compilation(p, unsharp::build_symmetric_povm(p.p0, p.axis));
        if (max_deviation != nullptr) {
            *max_deviation = r.max_deviation;
        }
        if (zero_information != nullptr) {
            *zero_information = r.zero_information ? 1 : 0;
        }
        if (report != nullptr) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto &row : r.rows) {
                rows.push_back({{"input", row.input},
                                {"outcome", row.outcome},
                                {"physical_probability", row.physical_probability},
                                {"abstract_probability", row.abstract_probability},
                                {"infidelity", row.infidelity}});
            }
            nlohmann::json j = {
                {"scheme", static_cast<int>(p.scheme)},
                {"p0", p.p0},
                {"theta", p.axis.theta()},
                {"phi", p.axis.phi()},
                {"pulses", p.pulses.size()},
                {"max_deviation", r.max_deviation},
                {"max_probability_deviation", r.max_probability_deviation},
                {"max_infidelity", r.max_infidelity},
                {"max_leakage", r.max_leakage},
                {"zero_information", r.zero_information},
                {"rows", rows},
            };
            if (p.scheme == unsharp::Scheme::kSchemeII) {
                double chi = p.pulses.size() == 3 ? p.pulses[1].angle : 0.0;
                j["chi"] = chi;
                j["weak_regime"] = chi <= unsharp::kWeakChiAdvisory;
            }
            *report = make_buffer(j.dump(2) + "\n");
        }
    });
}

unsharp_status unsharp_estimation_run(const char *config_json, int jobs, unsharp_sweep **out) {
    REQUIRE(config_json);
    REQUIRE(out);
    return guarded([&] {
        unsharp::EstimationExperiment e =
            unsharp::parse_estimation_experiment(unsharp::parse_json_text(config_json));
        unsharp::SweepOptions opts{jobs, e.record_trajectories};
        auto sweep = new unsharp_sweep{unsharp::sweep_estimation(e.config, e.variable, e.grid, opts),
                                       unsharp::to_json(e), false, timescale_warnings(e.config)};
        *out = sweep;
    });
}

unsharp_status unsharp_preparation_run(const char *config_json, int jobs, unsharp_sweep **out) {
    REQUIRE(config_json);
    REQUIRE(out);
    return guarded([&] {
        unsharp::PreparationExperiment e =
            unsharp::parse_preparation_experiment(unsharp::parse_json_text(config_json));
        unsharp::SweepOptions opts{jobs, e.record_trajectories};
        auto sweep = new unsharp_sweep{unsharp::sweep_preparation(e.config, e.variable, e.grid, opts),
                                       unsharp::to_json(e), true, ""};
        *out = sweep;
    });
}

void unsharp_sweep_destroy(unsharp_sweep *sweep) {
    delete sweep;
}

unsharp_status unsharp_sweep_csv(const unsharp_sweep *sweep, int table, unsharp_buffer **out) {
    REQUIRE(sweep);
    REQUIRE(out);
    return guarded([&] {
        if (table == 0) {
            *out = make_buffer(sweep->preparation ? unsharp::preparation_fidelity_csv(sweep->result)
                                                  : unsharp::estimation_csv(sweep->result));
        } else if (table == 1 && sweep->preparation) {
            *out = make_buffer(unsharp::preparation_count_csv(sweep->result));
        } else {
            throw std::invalid_argument("no such table for this sweep");
        }
    });
}

unsharp_status unsharp_sweep_trajectories(const unsharp_sweep *sweep, unsharp_buffer **out) {
    REQUIRE(sweep);
    REQUIRE(out);
    return guarded([&] { *out = make_buffer(unsharp::trajectories_jsonl(sweep->result)); });
}

unsharp_status unsharp_sweep_config(const unsharp_sweep *sweep, unsharp_buffer **out) {
    REQUIRE(sweep);
    REQUIRE(out);
    return guarded([&] { *out = make_buffer(sweep->config.dump(2) + "\n"); });
}

unsharp_status unsharp_sweep_warnings(const unsharp_sweep *sweep, unsharp_buffer **out) {
    REQUIRE(sweep);
    REQUIRE(out);
    return guarded([&] { *out = make_buffer(sweep->warnings); });
}

unsharp_status unsharp_sweep_point(const unsharp_sweep *sweep, size_t index, double *grid_value,
                                   double *mean_fidelity, double *stderr_fidelity, double *mean_count,
                                   double *stderr_count) {
    REQUIRE(sweep);
    if (index >= sweep->result.points.size()) {
        return fail(UNSHARP_ERR_INVALID_ARGUMENT, "sweep point index out of range");
    }
    const unsharp::SweepPoint &p = sweep->result.points[index];
    double *outs[] = {grid_value, mean_fidelity, stderr_fidelity, mean_count, stderr_count};
    double vals[] = {p.grid_value, p.mean_fidelity, p.stderr_fidelity, p.mean_count, p.stderr_count};
    for (size_t k = 0; k < 5; k++) {
        if (outs[k] != nullptr) {
            *outs[k] = vals[k];
        }
    }
    return UNSHARP_OK;
}

unsharp_status unsharp_sweep_size(const unsharp_sweep *sweep, size_t *count) {
    REQUIRE(sweep);
    REQUIRE(count);
    *count = sweep->result.points.size();
    return UNSHARP_OK;
}

unsharp_status unsharp_budget_run(const char *config_json, unsharp_buffer **key_values,
                                  unsharp_buffer **json_report) {
    REQUIRE(config_json);
    return guarded([&] {
        unsharp::BudgetExperiment e = unsharp::parse_budget_experiment(unsharp::parse_json_text(config_json));
        unsharp::BudgetReport r = e.chain == unsharp::BudgetChain::kMetastable
                                      ? unsharp::metastable_chain(e.metastable, e.constants)
                                      : unsharp::dipole_chain(e.dipole, e.constants);
        std::string kv;
        nlohmann::json quantities = nlohmann::json::object();
        for (const auto &[name, value] : r) {
            kv += name + "=" + unsharp::format_real(value) + "\n";
            if (std::isfinite(value)) {
                quantities[name] = value;
            } else {
                quantities[name] = nullptr;
            }
        }
        if (key_values != nullptr) {
            *key_values = make_buffer(kv);
        }
        if (json_report != nullptr) {
            nlohmann::json j = {{"config", unsharp::to_json(e)}, {"quantities", quantities}};
            *json_report = make_buffer(j.dump(2) + "\n");
        }
    });
}

unsharp_status unsharp_config_help(const char *kind, unsharp_buffer **out) {
    REQUIRE(kind);
    REQUIRE(out);
    return guarded([&] {
        std::string k = kind;
        std::vector<std::pair<std::string, std::string>> keys;
        if (k == "estimation") {
            keys = unsharp::estimation_config_keys();
        } else if (k == "preparation") {
            keys = unsharp::preparation_config_keys();
        } else if (k == "budget") {
            keys = unsharp::budget_config_keys();
        } else {
            throw std::invalid_argument("unknown configuration kind '" + k + "'");
        }
        std::string text;
        for (const auto &[key, doc] : keys) {
            text += "  " + key + "\n      " + doc + "\n";
        }
        *out = make_buffer(text);
    });
}

}  // extern "C"
