// SPDX-License-Identifier: Apache-2.0
//
// satswarm: link-level simulator for cooperative satellite swarm downlinks
// Copyright (C) 2026 The satswarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/* C interface to the satswarm simulator.
 *
 * Every function returns an ssw_status; on failure ssw_last_error() gives a
 * human-readable message for the calling thread. Handles are opaque and must
 * be released with the matching *_free function. Physical quantities are SI
 * (metres, radians, watts) unless a name says otherwise.
 */

#ifndef SATSWARM_H
#define SATSWARM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SSW_BUILDING_LIBRARY)
#define SSW_API __declspec(dllexport)
#else
#define SSW_API __declspec(dllimport)
#endif
#else
#define SSW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssw_status
{
    SSW_OK = 0,
    SSW_E_INVALID_ARGUMENT = 1, /* null handle, bad enum, short buffer */
    SSW_E_INVALID_CONFIG = 2,
    SSW_E_INVALID_INPUT = 3,
    SSW_E_NO_CONVERGENCE = 4,
    SSW_E_NO_ROOT = 5,
    SSW_E_NUMERICAL = 6,
    SSW_E_IO = 7,
    SSW_E_INTERNAL = 8
} ssw_status;

typedef enum ssw_axis
{
    SSW_AXIS_INTER_SAT_DISTANCE = 0, /* axis values in km */
    SSW_AXIS_TRANSMIT_POWER = 1,     /* axis values in dBW */
    SSW_AXIS_MEAN_ELEVATION = 2      /* axis values in degrees */
} ssw_axis;

typedef enum ssw_format
{
    SSW_FORMAT_CSV = 0,
    SSW_FORMAT_JSON = 1
} ssw_format;

typedef struct ssw_rates
{
    double r_opt;
    double r_per;
    double r_lin_geo;
    double r_lin_opt_eq;
    double r_upper;
} ssw_rates;

typedef struct ssw_record
{
    double axis_value;
    ssw_rates mean;
    ssw_rates std;
    ssw_rates median;
    int num_trials;
} ssw_record;

typedef struct ssw_spacing
{
    double ds_orth_m;
    double delta_phi;
    int iterations;
} ssw_spacing;

typedef struct ssw_scenario ssw_scenario;
typedef struct ssw_results ssw_results;

SSW_API const char *ssw_version(void);
SSW_API const char *ssw_status_string(ssw_status status);
/* Message of the last failed call on this thread; empty after success. */
SSW_API const char *ssw_last_error(void);

/* Scenario handles hold the YAML text plus key=value overrides; the
 * configuration is parsed and validated again whenever it is used. */
SSW_API ssw_status ssw_scenario_default(ssw_scenario **out);
SSW_API ssw_status ssw_scenario_load(const char *path, ssw_scenario **out);
SSW_API ssw_status ssw_scenario_from_string(const char *yaml, ssw_scenario **out);
SSW_API ssw_status ssw_scenario_set(ssw_scenario *scenario, const char *key, const char *value);
/* Forces the sweep axis; fails if the document names a different one. */
SSW_API ssw_status ssw_scenario_set_axis(ssw_scenario *scenario, ssw_axis axis);
SSW_API ssw_status ssw_scenario_validate(const ssw_scenario *scenario);
/* Writes the 16-character digest and a terminating NUL; needs len >= 17. */
SSW_API ssw_status ssw_scenario_digest(const ssw_scenario *scenario, char *buf, size_t len);
/* Canonical JSON of the resolved configuration. If buf is null or too small,
 * *len receives the required size (including NUL) and SSW_E_INVALID_ARGUMENT
 * is returned for the short-buffer case. */
SSW_API ssw_status ssw_scenario_canonical_json(const ssw_scenario *scenario, char *buf, size_t *len);
SSW_API void ssw_scenario_free(ssw_scenario *scenario);

/* Runs the scenario's sweep. threads == 0 uses every hardware thread. */
SSW_API ssw_status ssw_run_sweep(const ssw_scenario *scenario, unsigned threads, ssw_results **out);
SSW_API ssw_status ssw_results_axis(const ssw_results *results, ssw_axis *axis);
SSW_API size_t ssw_results_size(const ssw_results *results);
SSW_API ssw_status ssw_results_record(const ssw_results *results, size_t index, ssw_record *out);
SSW_API ssw_status ssw_results_digest(const ssw_results *results, char *buf, size_t len);
/* Serialized bytes, same buffer protocol as ssw_scenario_canonical_json. */
SSW_API ssw_status ssw_results_serialize(const ssw_results *results, ssw_format format, char *buf, size_t *len);
/* Writes <dir>/<stem>_<digest>.<csv|json>; the path goes to path_out when
 * it is non-null. */
SSW_API ssw_status ssw_results_write(const ssw_results *results, ssw_format format, const char *dir,
                                     const char *stem, char *path_out, size_t path_len);
SSW_API void ssw_results_free(ssw_results *results);

/* Inter-satellite distance that makes neighbouring steering vectors
 * orthogonal at leading-satellite elevation theta_rad. */
SSW_API ssw_status ssw_optimal_spacing(double theta_rad, int rx_antennas, double altitude_m, int harmonic,
                                       ssw_spacing *out);
SSW_API ssw_status ssw_delta_phi(double theta_rad, double ds_m, double altitude_m, double *out);

#ifdef __cplusplus
}
#endif

#endif
