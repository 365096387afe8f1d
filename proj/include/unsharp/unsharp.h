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


/* C interface of libunsharp. Objects are opaque handles released with the
 * matching *_destroy function. Every call returns an unsharp_status; on
 * failure unsharp_last_error() describes it (per thread, valid until the next
 * failing call on that thread). Qubit states cross the boundary as four
 * doubles {re g, im g, re e, im e}; 2x2 matrices as eight doubles, row-major,
 * real and imaginary parts interleaved. */

#ifndef UNSHARP_UNSHARP_H
#define UNSHARP_UNSHARP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UNSHARP_API __declspec(dllexport)
#else
#define UNSHARP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unsharp_status {
    UNSHARP_OK = 0,
    /* A parameter is outside its documented range. */
    UNSHARP_ERR_INVALID_ARGUMENT = 1,
    /* The operation is undefined for this input (e.g. a zero-probability outcome). */
    UNSHARP_ERR_DOMAIN = 2,
    /* A configuration document is malformed; the message starts with the key path. */
    UNSHARP_ERR_CONFIG = 3,
    /* A required pointer argument was NULL. */
    UNSHARP_ERR_NULL = 4,
    UNSHARP_ERR_RUNTIME = 5,
} unsharp_status;

typedef struct unsharp_buffer unsharp_buffer;
typedef struct unsharp_povm unsharp_povm;
typedef struct unsharp_rng unsharp_rng;
typedef struct unsharp_program unsharp_program;
typedef struct unsharp_sweep unsharp_sweep;

UNSHARP_API const char *unsharp_version(void);
UNSHARP_API const char *unsharp_last_error(void);
UNSHARP_API const char *unsharp_status_name(unsharp_status status);

/* Byte buffers returned by the library. */
UNSHARP_API const char *unsharp_buffer_data(const unsharp_buffer *buffer);
UNSHARP_API size_t unsharp_buffer_size(const unsharp_buffer *buffer);
UNSHARP_API void unsharp_buffer_destroy(unsharp_buffer *buffer);

/* Symmetric unsharp measurement with outcome-0 weight p0 along
 * (sin t cos p, sin t sin p, cos t). */
UNSHARP_API unsharp_status unsharp_povm_create(double p0, double theta, double phi, unsharp_povm **out);
UNSHARP_API void unsharp_povm_destroy(unsharp_povm *povm);
UNSHARP_API unsharp_status unsharp_povm_matrices(const unsharp_povm *povm, double m0[8], double m1[8]);
UNSHARP_API unsharp_status unsharp_povm_sharpness(const unsharp_povm *povm, double *delta_p);
UNSHARP_API unsharp_status unsharp_outcome_probability(const unsharp_povm *povm, const double state[4], int outcome,
                                                       double *probability);
/* Normalized post-measurement state. The input need not be normalized. */
UNSHARP_API unsharp_status unsharp_apply_measurement(const unsharp_povm *povm, const double state[4], int outcome,
                                                     double post_state[4], double *probability);

UNSHARP_API unsharp_status unsharp_rng_create(uint64_t seed, unsharp_rng **out);
UNSHARP_API void unsharp_rng_destroy(unsharp_rng *rng);
UNSHARP_API unsharp_status unsharp_sample_outcome(const unsharp_povm *povm, const double state[4], unsharp_rng *rng,
                                                  int *outcome);

/* Compiles a measurement to a pulse program. Scheme 1 takes any axis; scheme 2
 * realizes the z axis only, with the squeeze strength chosen so the realized
 * p0 equals the requested one. */
UNSHARP_API unsharp_status unsharp_compile(int scheme, double p0, double theta, double phi, unsharp_program **out);
UNSHARP_API unsharp_status unsharp_program_parse(const char *text, unsharp_program **out);
UNSHARP_API void unsharp_program_destroy(unsharp_program *program);
UNSHARP_API unsharp_status unsharp_program_serialize(const unsharp_program *program, unsharp_buffer **out);
UNSHARP_API unsharp_status unsharp_program_pulse_count(const unsharp_program *program, size_t *count);
/* Runs the physical pipeline against the abstract measurement on the four
 * standard inputs. `report` receives a JSON document; the scalar outputs may be
 * NULL. */
UNSHARP_API unsharp_status unsharp_program_verify(const unsharp_program *program, double *max_deviation,
                                                  int *zero_information, unsharp_buffer **report);

/* Experiments take a JSON configuration document (see the README). */
UNSHARP_API unsharp_status unsharp_estimation_run(const char *config_json, int jobs, unsharp_sweep **out);
UNSHARP_API unsharp_status unsharp_preparation_run(const char *config_json, int jobs, unsharp_sweep **out);
UNSHARP_API void unsharp_sweep_destroy(unsharp_sweep *sweep);
/* table 0: fidelity CSV; table 1: measurement-count CSV (preparation only). */
UNSHARP_API unsharp_status unsharp_sweep_csv(const unsharp_sweep *sweep, int table, unsharp_buffer **out);
/* Recorded trajectories, one JSON object per line (empty when none were requested). */
UNSHARP_API unsharp_status unsharp_sweep_trajectories(const unsharp_sweep *sweep, unsharp_buffer **out);
/* Fully resolved configuration, defaults included, as JSON. */
UNSHARP_API unsharp_status unsharp_sweep_config(const unsharp_sweep *sweep, unsharp_buffer **out);
/* Advisory messages, one per line (timescale ordering and the like). */
UNSHARP_API unsharp_status unsharp_sweep_warnings(const unsharp_sweep *sweep, unsharp_buffer **out);
UNSHARP_API unsharp_status unsharp_sweep_point(const unsharp_sweep *sweep, size_t index, double *grid_value,
                                               double *mean_fidelity, double *stderr_fidelity, double *mean_count,
                                               double *stderr_count);
UNSHARP_API unsharp_status unsharp_sweep_size(const unsharp_sweep *sweep, size_t *count);

/* Parses a budget configuration and evaluates its chain. `key_values` gets
 * one name=value line per quantity; `json_report` a JSON object holding the
 * resolved configuration and every quantity. Either output may be NULL. */
UNSHARP_API unsharp_status unsharp_budget_run(const char *config_json, unsharp_buffer **key_values,
                                              unsharp_buffer **json_report);

/* Help text listing every configuration key of "estimation", "preparation"
 * or "budget". */
UNSHARP_API unsharp_status unsharp_config_help(const char *kind, unsharp_buffer **out);

#ifdef __cplusplus
}
#endif

#endif
