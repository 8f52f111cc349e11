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

#include "satswarm/satswarm.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "satswarm/engine.hpp"
#include "satswarm/results_io.hpp"
#include "satswarm/scenario.hpp"
#include "satswarm/spacing.hpp"

struct ssw_scenario
{
    std::string yaml;
    std::vector<std::string> overrides;
    std::optional<satswarm::SweepAxis> axis;

    satswarm::ScenarioConfig resolve() const { return satswarm::parse_scenario(yaml, overrides, axis); }
};

struct ssw_results
{
    satswarm::SweepResult result;
};

namespace
{

using namespace satswarm;

thread_local std::string g_last_error;

ssw_status status_of(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::InvalidConfig:
        return SSW_E_INVALID_CONFIG;
    case ErrorCode::InvalidInput:
        return SSW_E_INVALID_INPUT;
    case ErrorCode::NoConvergence:
        return SSW_E_NO_CONVERGENCE;
    case ErrorCode::NoRoot:
        return SSW_E_NO_ROOT;
    case ErrorCode::NumericalError:
        return SSW_E_NUMERICAL;
    case ErrorCode::IoError:
        return SSW_E_IO;
    }
    return SSW_E_INTERNAL;
}

ssw_status set_error(ssw_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

template <typename F>
ssw_status guarded(F &&body)
{
    try
    {
        g_last_error.clear();
        body();
        return SSW_OK;
    }
    catch (const Error &e)
    {
        return set_error(status_of(e.code()), e.what());
    }
    catch (const std::exception &e)
    {
        return set_error(SSW_E_INTERNAL, e.what());
    }
    catch (...)
    {
        return set_error(SSW_E_INTERNAL, "unknown exception");
    }
}

std::optional<SweepAxis> axis_from(ssw_axis axis)
{
    switch (axis)
    {
    case SSW_AXIS_INTER_SAT_DISTANCE:
        return SweepAxis::InterSatDistance;
    case SSW_AXIS_TRANSMIT_POWER:
        return SweepAxis::TransmitPower;
    case SSW_AXIS_MEAN_ELEVATION:
        return SweepAxis::MeanElevationTime;
    }
    return std::nullopt;
}

ssw_axis axis_to(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        return SSW_AXIS_INTER_SAT_DISTANCE;
    case SweepAxis::TransmitPower:
        return SSW_AXIS_TRANSMIT_POWER;
    case SweepAxis::MeanElevationTime:
        return SSW_AXIS_MEAN_ELEVATION;
    }
    return SSW_AXIS_INTER_SAT_DISTANCE;
}

ssw_rates rates_to(const RateMetrics &m) { return {m.r_opt, m.r_per, m.r_lin_geo, m.r_lin_opt_eq, m.r_upper}; }

ssw_status copy_out(const std::string &text, char *buf, size_t *len)
{
    if (!len)
        return set_error(SSW_E_INVALID_ARGUMENT, "length pointer is null");
    const size_t needed = text.size() + 1;
    if (!buf || *len < needed)
    {
        *len = needed;
        return buf ? set_error(SSW_E_INVALID_ARGUMENT, "buffer too small") : SSW_OK;
    }
    std::memcpy(buf, text.c_str(), needed);
    *len = needed;
    return SSW_OK;
}

ssw_status copy_string(const std::string &text, char *buf, size_t len)
{
    if (!buf || len < text.size() + 1)
        return set_error(SSW_E_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return SSW_OK;
}

ssw_status null_argument(const char *what) { return set_error(SSW_E_INVALID_ARGUMENT, std::string(what) + " is null"); }

} // namespace

extern "C" {

const char *ssw_version(void) { return "0.1.0"; }

const char *ssw_status_string(ssw_status status)
{
    switch (status)
    {
    case SSW_OK:
        return "ok";
    case SSW_E_INVALID_ARGUMENT:
        return "invalid argument";
    case SSW_E_INVALID_CONFIG:
        return "invalid configuration";
    case SSW_E_INVALID_INPUT:
        return "invalid input";
    case SSW_E_NO_CONVERGENCE:
        return "no convergence";
    case SSW_E_NO_ROOT:
        return "no root";
    case SSW_E_NUMERICAL:
        return "numerical error";
    case SSW_E_IO:
        return "i/o error";
    case SSW_E_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *ssw_last_error(void) { return g_last_error.c_str(); }

ssw_status ssw_scenario_default(ssw_scenario **out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] { *out = new ssw_scenario{}; });
}

ssw_status ssw_scenario_from_string(const char *yaml, ssw_scenario **out)
{
    if (!yaml || !out)
        return null_argument(!yaml ? "yaml" : "out");
    return guarded(
        [&]
        {
            auto s = std::make_unique<ssw_scenario>();
            s->yaml = yaml;
            s->resolve();
            *out = s.release();
        });
}

ssw_status ssw_scenario_load(const char *path, ssw_scenario **out)
{
    if (!path || !out)
        return null_argument(!path ? "path" : "out");
    return guarded(
        [&]
        {
            std::ifstream in(path);
            if (!in)
                fail(ErrorCode::IoError, std::string("cannot open scenario file '") + path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            auto s = std::make_unique<ssw_scenario>();
            s->yaml = text.str();
            s->resolve();
            *out = s.release();
        });
}

ssw_status ssw_scenario_set(ssw_scenario *scenario, const char *key, const char *value)
{
    if (!scenario || !key || !value)
        return null_argument(!scenario ? "scenario" : !key ? "key" : "value");
    return guarded(
        [&]
        {
            scenario->overrides.push_back(std::string(key) + "=" + value);
            try
            {
                scenario->resolve();
            }
            catch (...)
            {
                scenario->overrides.pop_back();
                throw;
            }
        });
}

ssw_status ssw_scenario_set_axis(ssw_scenario *scenario, ssw_axis axis)
{
    if (!scenario)
        return null_argument("scenario");
    const auto a = axis_from(axis);
    if (!a)
        return set_error(SSW_E_INVALID_ARGUMENT, "unknown axis");
    return guarded(
        [&]
        {
            const auto previous = scenario->axis;
            scenario->axis = a;
            try
            {
                scenario->resolve();
            }
            catch (...)
            {
                scenario->axis = previous;
                throw;
            }
        });
}

ssw_status ssw_scenario_validate(const ssw_scenario *scenario)
{
    if (!scenario)
        return null_argument("scenario");
    return guarded([&] { scenario->resolve(); });
}

ssw_status ssw_scenario_digest(const ssw_scenario *scenario, char *buf, size_t len)
{
    if (!scenario)
        return null_argument("scenario");
    std::string digest;
    const ssw_status st = guarded([&] { digest = config_digest(scenario->resolve()); });
    return st == SSW_OK ? copy_string(digest, buf, len) : st;
}

ssw_status ssw_scenario_canonical_json(const ssw_scenario *scenario, char *buf, size_t *len)
{
    if (!scenario)
        return null_argument("scenario");
    std::string text;
    const ssw_status st = guarded([&] { text = canonical_json(scenario->resolve()); });
    return st == SSW_OK ? copy_out(text, buf, len) : st;
}

void ssw_scenario_free(ssw_scenario *scenario) { delete scenario; }

ssw_status ssw_run_sweep(const ssw_scenario *scenario, unsigned threads, ssw_results **out)
{
    if (!scenario || !out)
        return null_argument(!scenario ? "scenario" : "out");
    return guarded(
        [&]
        {
            const ScenarioConfig cfg = scenario->resolve();
            auto r = std::make_unique<ssw_results>();
            r->result = run_sweep(cfg, RunOptions{threads});
            *out = r.release();
        });
}

ssw_status ssw_results_axis(const ssw_results *results, ssw_axis *axis)
{
    if (!results || !axis)
        return null_argument(!results ? "results" : "axis");
    *axis = axis_to(results->result.axis);
    return SSW_OK;
}

size_t ssw_results_size(const ssw_results *results) { return results ? results->result.records.size() : 0; }

ssw_status ssw_results_record(const ssw_results *results, size_t index, ssw_record *out)
{
    if (!results || !out)
        return null_argument(!results ? "results" : "out");
    if (index >= results->result.records.size())
        return set_error(SSW_E_INVALID_ARGUMENT, "record index out of range");
    const SweepRecord &r = results->result.records[index];
    *out = ssw_record{r.axis_value, rates_to(r.mean), rates_to(r.std), rates_to(r.median), r.num_trials};
    return SSW_OK;
}

ssw_status ssw_results_digest(const ssw_results *results, char *buf, size_t len)
{
    if (!results)
        return null_argument("results");
    if (results->result.records.empty())
        return set_error(SSW_E_INVALID_INPUT, "no records");
    return copy_string(results->result.records.front().config_digest, buf, len);
}

ssw_status ssw_results_serialize(const ssw_results *results, ssw_format format, char *buf, size_t *len)
{
    if (!results)
        return null_argument("results");
    if (format != SSW_FORMAT_CSV && format != SSW_FORMAT_JSON)
        return set_error(SSW_E_INVALID_ARGUMENT, "unknown format");
    std::string text;
    const ssw_status st = guarded(
        [&]
        {
            text = serialize_results(results->result,
                                     format == SSW_FORMAT_CSV ? ResultFormat::Csv : ResultFormat::Json);
        });
    return st == SSW_OK ? copy_out(text, buf, len) : st;
}

ssw_status ssw_results_write(const ssw_results *results, ssw_format format, const char *dir, const char *stem,
                             char *path_out, size_t path_len)
{
    if (!results || !dir || !stem)
        return null_argument(!results ? "results" : !dir ? "dir" : "stem");
    if (format != SSW_FORMAT_CSV && format != SSW_FORMAT_JSON)
        return set_error(SSW_E_INVALID_ARGUMENT, "unknown format");
    std::string path;
    const ssw_status st = guarded(
        [&]
        {
            path = write_results(results->result, format == SSW_FORMAT_CSV ? ResultFormat::Csv : ResultFormat::Json,
                                 dir, stem)
                       .string();
        });
    if (st != SSW_OK || !path_out)
        return st;
    return copy_string(path, path_out, path_len);
}

void ssw_results_free(ssw_results *results) { delete results; }

ssw_status ssw_optimal_spacing(double theta_rad, int rx_antennas, double altitude_m, int harmonic, ssw_spacing *out)
{
    if (!out)
        return null_argument("out");
    return guarded(
        [&]
        {
            SpacingQuery q;
            q.elevation = theta_rad;
            q.rx = rx_antennas;
            q.orbit.altitude = altitude_m;
            q.harmonic = harmonic;
            const SpacingResult r = optimal_spacing(q);
            *out = ssw_spacing{r.ds_orth, r.delta_phi_achieved, r.iterations};
        });
}

ssw_status ssw_delta_phi(double theta_rad, double ds_m, double altitude_m, double *out)
{
    if (!out)
        return null_argument("out");
    return guarded(
        [&]
        {
            OrbitConfig orbit;
            orbit.altitude = altitude_m;
            orbit.validate();
            *out = delta_phi(theta_rad, ds_m, orbit);
        });
}

} // extern "C"
