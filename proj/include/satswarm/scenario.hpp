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

#ifndef SATSWARM_SCENARIO_HPP
#define SATSWARM_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satswarm/channel.hpp"
#include "satswarm/geometry.hpp"

namespace satswarm
{

enum class SweepAxis
{
    InterSatDistance,  // values in metres, reported in km
    TransmitPower,     // values in watts, reported in dBW
    MeanElevationTime, // values in radians, reported in degrees
};

const char *axis_name(SweepAxis axis);
const char *axis_unit(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view name);
double axis_display_value(SweepAxis axis, double internal_value);

struct SweepSpec
{
    SweepAxis axis = SweepAxis::InterSatDistance;
    std::vector<double> values;
    std::optional<double> fixed_theta_mean; // defaults to zenith
    bool time_average = false;              // average over the pass time grid
    int time_points = 121;
};

struct ScenarioConfig
{
    OrbitConfig orbit;
    ArrayConfig arrays; // tx_per_satellite == total_tx_antennas / num_satellites
    int total_tx_antennas = 60;
    int num_satellites = 3;
    double total_tx_power = 10.0;  // W (10 dBW)
    double noise_power = 1e-12;    // W (-120 dBW)
    double min_elevation = deg_to_rad(30.0);
    double inter_sat_distance = 70e3;
    PointingPolicy pointing;
    LossConfig loss;
    SweepSpec sweep;
    std::uint64_t seed = 1;
    int trials = 200;

    double per_sat_power() const { return total_tx_power / num_satellites; }
    double theta_mean_fixed() const { return sweep.fixed_theta_mean.value_or(kPi / 2); }
    // Uniform grid of swarm mean elevations over [theta_min, pi - theta_min].
    std::vector<double> time_grid() const;

    // Throws InvalidConfig naming the first violated constraint.
    void validate() const;
};

std::vector<double> default_sweep_values(SweepAxis axis, const ScenarioConfig &cfg);

/// Parses a YAML scenario. Overrides are "section.key=value" strings applied
/// to the document before conversion; values are YAML scalars or flow lists.
/// When required_axis is given the sweep axis is forced to it (a conflicting
/// explicit axis in the document is an error) and missing sweep values fall
/// back to the axis defaults. Unknown keys are errors. The result is
/// validated.
ScenarioConfig parse_scenario(std::string_view yaml_text, std::span<const std::string> overrides = {},
                              std::optional<SweepAxis> required_axis = std::nullopt);

ScenarioConfig load_scenario(const std::filesystem::path &path, std::span<const std::string> overrides = {},
                             std::optional<SweepAxis> required_axis = std::nullopt);

/// Canonical JSON rendering (sorted keys, SI units) of every config field.
std::string canonical_json(const ScenarioConfig &cfg);

/// First 16 hex digits of the SHA-256 of canonical_json.
std::string config_digest(const ScenarioConfig &cfg);

} // namespace satswarm

#endif
