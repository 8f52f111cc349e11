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

#include "satswarm/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include "json.hpp"

namespace satswarm
{

namespace
{

[[noreturn]] void config_error(const std::string &what) { fail(ErrorCode::InvalidConfig, what); }

template <typename T>
T scalar(const YAML::Node &node, const std::string &key)
{
    if (!node.IsScalar())
        config_error("'" + key + "' must be a scalar");
    try
    {
        return node.as<T>();
    }
    catch (const YAML::Exception &)
    {
        config_error("'" + key + "' has an invalid value '" + node.Scalar() + "'");
    }
}

std::vector<double> number_list(const YAML::Node &node, const std::string &key)
{
    if (!node.IsSequence())
        config_error("'" + key + "' must be a list");
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(scalar<double>(node[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

using Handler = std::function<void(const YAML::Node &, const std::string &)>;

// Applies one handler per key of a mapping section; any key without a
// handler is an error.
void walk_section(const YAML::Node &root, const std::string &section,
                  const std::map<std::string, Handler> &handlers)
{
    const YAML::Node node = root[section];
    if (!node || node.IsNull())
        return;
    if (!node.IsMap())
        config_error("section '" + section + "' must be a mapping");
    for (const auto &kv : node)
    {
        const auto key = kv.first.as<std::string>();
        const std::string path = section + "." + key;
        const auto it = handlers.find(key);
        if (it == handlers.end())
            config_error("unknown key '" + path + "'");
        it->second(kv.second, path);
    }
}

std::vector<double> expand_range(const YAML::Node &node, const std::string &key)
{
    if (!node.IsMap())
        config_error("'" + key + "' must be a mapping with start, stop and step");
    double start = 0.0, stop = 0.0, step = 0.0;
    bool has_start = false, has_stop = false, has_step = false;
    for (const auto &kv : node)
    {
        const auto name = kv.first.as<std::string>();
        if (name == "start")
            start = scalar<double>(kv.second, key + ".start"), has_start = true;
        else if (name == "stop")
            stop = scalar<double>(kv.second, key + ".stop"), has_stop = true;
        else if (name == "step")
            step = scalar<double>(kv.second, key + ".step"), has_step = true;
        else
            config_error("unknown key '" + key + "." + name + "'");
    }
    if (!(has_start && has_stop && has_step))
        config_error("'" + key + "' needs start, stop and step");
    if (!(step > 0.0) || stop < start)
        config_error("'" + key + "' must have step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = start + static_cast<double>(i) * step;
    return out;
}

double to_internal(SweepAxis axis, double display)
{
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        return km_to_m(display);
    case SweepAxis::TransmitPower:
        return db_to_linear(display);
    case SweepAxis::MeanElevationTime:
        return deg_to_rad(display);
    }
    return display;
}

void apply_override(YAML::Node &root, const std::string &assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        config_error("override '" + assignment + "' is not of the form section.key=value");
    const std::string path = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);
    const auto dot = path.find('.');
    if (dot == std::string::npos || path.find('.', dot + 1) != std::string::npos || dot == 0 ||
        dot + 1 == path.size())
        config_error("override key '" + path + "' must be section.key");

    YAML::Node parsed;
    try
    {
        parsed = YAML::Load(value);
    }
    catch (const YAML::Exception &e)
    {
        config_error("override '" + assignment + "' has an unparsable value: " + e.what());
    }
    const std::string section = path.substr(0, dot);
    if (root[section] && !root[section].IsMap() && !root[section].IsNull())
        config_error("section '" + section + "' must be a mapping");
    root[section][path.substr(dot + 1)] = parsed;
}

ScenarioConfig from_node(const YAML::Node &root, std::optional<SweepAxis> required_axis)
{
    if (root && !root.IsNull() && !root.IsMap())
        config_error("scenario file must be a mapping of sections");

    static const std::vector<std::string> kSections = {"orbit",  "arrays", "swarm",     "power",
                                                       "losses", "sweep",  "simulation"};
    if (root.IsMap())
        for (const auto &kv : root)
        {
            const auto name = kv.first.as<std::string>();
            if (std::find(kSections.begin(), kSections.end(), name) == kSections.end())
                config_error("unknown section '" + name + "'");
        }

    ScenarioConfig cfg;

    walk_section(root, "orbit",
                 {{"altitude_km", [&](auto &n, auto &k) { cfg.orbit.altitude = km_to_m(scalar<double>(n, k)); }},
                  {"earth_radius_km",
                   [&](auto &n, auto &k) { cfg.orbit.earth_radius = km_to_m(scalar<double>(n, k)); }}});

    walk_section(root, "arrays",
                 {{"carrier_ghz",
                   [&](auto &n, auto &k) { cfg.arrays.carrier_frequency = scalar<double>(n, k) * 1e9; }},
                  {"total_tx_antennas", [&](auto &n, auto &k) { cfg.total_tx_antennas = scalar<int>(n, k); }},
                  {"rx_antennas", [&](auto &n, auto &k) { cfg.arrays.rx = scalar<int>(n, k); }}});

    walk_section(
        root, "swarm",
        {{"satellites", [&](auto &n, auto &k) { cfg.num_satellites = scalar<int>(n, k); }},
         {"inter_sat_distance_km",
          [&](auto &n, auto &k) { cfg.inter_sat_distance = km_to_m(scalar<double>(n, k)); }},
         {"pointing",
          [&](auto &n, auto &k)
          {
              const auto mode = scalar<std::string>(n, k);
              if (mode == "track_receiver")
                  cfg.pointing.mode = PointingMode::TrackReceiver;
              else if (mode == "fixed_rotation")
                  cfg.pointing.mode = PointingMode::FixedRotation;
              else
                  config_error("'" + k + "' must be track_receiver or fixed_rotation");
          }},
         {"fixed_rotation_deg",
          [&](auto &n, auto &k) { cfg.pointing.fixed_rotation = deg_to_rad(scalar<double>(n, k)); }}});

    walk_section(root, "power",
                 {{"total_tx_dbw", [&](auto &n, auto &k) { cfg.total_tx_power = db_to_linear(scalar<double>(n, k)); }},
                  {"noise_dbw", [&](auto &n, auto &k) { cfg.noise_power = db_to_linear(scalar<double>(n, k)); }}});

    LossConfig &loss = cfg.loss;
    walk_section(
        root, "losses",
        {{"tx_gain_dbi", [&](auto &n, auto &k) { loss.tx_gain_db = scalar<double>(n, k); }},
         {"rx_gain_dbi", [&](auto &n, auto &k) { loss.rx_gain_db = scalar<double>(n, k); }},
         {"shadow_fading", [&](auto &n, auto &k) { loss.shadow_fading = scalar<bool>(n, k); }},
         {"shadow_sigma_db",
          [&](auto &n, auto &k)
          {
              const auto values = number_list(n, k);
              if (values.size() != loss.shadow_sigma_db.size())
                  config_error("'" + k + "' needs 9 entries (10 to 90 deg)");
              std::copy(values.begin(), values.end(), loss.shadow_sigma_db.begin());
          }},
         {"gas", [&](auto &n, auto &k) { loss.gas = scalar<bool>(n, k); }},
         {"gas_zenith_db", [&](auto &n, auto &k) { loss.gas_zenith_db = scalar<double>(n, k); }},
         {"scintillation", [&](auto &n, auto &k) { loss.scintillation = scalar<bool>(n, k); }},
         {"scintillation_sigma_db", [&](auto &n, auto &k) { loss.scintillation_sigma_db = scalar<double>(n, k); }},
         {"clutter_db", [&](auto &n, auto &k) { loss.clutter_db = scalar<double>(n, k); }},
         {"random_phase", [&](auto &n, auto &k) { loss.random_phase = scalar<bool>(n, k); }},
         {"sigma_alpha_sq",
          [&](auto &n, auto &k)
          {
              if (n.IsNull())
                  loss.sigma_alpha_sq.reset();
              else
                  loss.sigma_alpha_sq = scalar<double>(n, k);
          }}});

    std::optional<SweepAxis> axis;
    std::optional<std::vector<double>> display_values;
    walk_section(
        root, "sweep",
        {{"axis",
          [&](auto &n, auto &k)
          {
              axis = parse_axis(scalar<std::string>(n, k));
              if (!axis)
                  config_error("'" + k + "' must be inter_sat_distance, transmit_power or mean_elevation");
          }},
         {"values",
          [&](auto &n, auto &k)
          {
              if (display_values)
                  config_error("'sweep' accepts either values or range, not both");
              display_values = number_list(n, k);
          }},
         {"range",
          [&](auto &n, auto &k)
          {
              if (display_values)
                  config_error("'sweep' accepts either values or range, not both");
              display_values = expand_range(n, k);
          }},
         {"theta_mean_deg",
          [&](auto &n, auto &k) { cfg.sweep.fixed_theta_mean = deg_to_rad(scalar<double>(n, k)); }},
         {"time_average", [&](auto &n, auto &k) { cfg.sweep.time_average = scalar<bool>(n, k); }},
         {"time_points", [&](auto &n, auto &k) { cfg.sweep.time_points = scalar<int>(n, k); }}});

    walk_section(root, "simulation",
                 {{"seed", [&](auto &n, auto &k) { cfg.seed = scalar<std::uint64_t>(n, k); }},
                  {"trials", [&](auto &n, auto &k) { cfg.trials = scalar<int>(n, k); }},
                  {"min_elevation_deg",
                   [&](auto &n, auto &k) { cfg.min_elevation = deg_to_rad(scalar<double>(n, k)); }}});

    if (required_axis)
    {
        if (axis && *axis != *required_axis)
            config_error(std::string("scenario sweeps ") + axis_name(*axis) + " but this command needs " +
                         axis_name(*required_axis));
        axis = required_axis;
    }
    cfg.sweep.axis = axis.value_or(SweepAxis::InterSatDistance);

    if (cfg.num_satellites >= 1 && cfg.total_tx_antennas % cfg.num_satellites == 0)
        cfg.arrays.tx_per_satellite = cfg.total_tx_antennas / cfg.num_satellites;

    if (display_values)
    {
        cfg.sweep.values.clear();
        for (double v : *display_values)
            cfg.sweep.values.push_back(to_internal(cfg.sweep.axis, v));
    }
    else
    {
        cfg.sweep.values = default_sweep_values(cfg.sweep.axis, cfg);
    }

    cfg.validate();
    return cfg;
}

} // namespace

const char *axis_name(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        return "inter_sat_distance";
    case SweepAxis::TransmitPower:
        return "transmit_power";
    case SweepAxis::MeanElevationTime:
        return "mean_elevation";
    }
    return "unknown";
}

const char *axis_unit(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        return "km";
    case SweepAxis::TransmitPower:
        return "dBW";
    case SweepAxis::MeanElevationTime:
        return "deg";
    }
    return "";
}

std::optional<SweepAxis> parse_axis(std::string_view name)
{
    for (auto axis : {SweepAxis::InterSatDistance, SweepAxis::TransmitPower, SweepAxis::MeanElevationTime})
        if (name == axis_name(axis))
            return axis;
    return std::nullopt;
}

double axis_display_value(SweepAxis axis, double internal_value)
{
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        return m_to_km(internal_value);
    case SweepAxis::TransmitPower:
        return linear_to_db(internal_value);
    case SweepAxis::MeanElevationTime:
        return rad_to_deg(internal_value);
    }
    return internal_value;
}

std::vector<double> ScenarioConfig::time_grid() const
{
    const int n = sweep.time_points;
    std::vector<double> grid(static_cast<std::size_t>(std::max(n, 0)));
    if (n == 1)
        grid[0] = kPi / 2;
    for (int i = 0; n > 1 && i < n; ++i)
        grid[static_cast<std::size_t>(i)] = min_elevation + (kPi - 2.0 * min_elevation) * i / (n - 1);
    return grid;
}

std::vector<double> default_sweep_values(SweepAxis axis, const ScenarioConfig &cfg)
{
    std::vector<double> out;
    switch (axis)
    {
    case SweepAxis::InterSatDistance:
        for (int km = 1; km <= 80; ++km)
            out.push_back(km_to_m(km));
        break;
    case SweepAxis::TransmitPower:
        for (int dbw = -10; dbw <= 30; dbw += 5)
            out.push_back(db_to_linear(dbw));
        break;
    case SweepAxis::MeanElevationTime:
    {
        const int lo = static_cast<int>(std::ceil(rad_to_deg(cfg.min_elevation) - 1e-9));
        const int hi = static_cast<int>(std::floor(180.0 - rad_to_deg(cfg.min_elevation) + 1e-9));
        for (int deg = lo; deg <= hi; ++deg)
            out.push_back(deg_to_rad(deg));
        break;
    }
    }
    return out;
}

void ScenarioConfig::validate() const
{
    orbit.validate();
    loss.validate();
    if (num_satellites < 1)
        config_error("swarm.satellites must be at least 1");
    if (total_tx_antennas < 1)
        config_error("arrays.total_tx_antennas must be at least 1");
    if (total_tx_antennas % num_satellites != 0)
        config_error("arrays.total_tx_antennas (" + std::to_string(total_tx_antennas) +
                     ") is not divisible by swarm.satellites (" + std::to_string(num_satellites) + ")");
    if (arrays.tx_per_satellite * num_satellites != total_tx_antennas)
        config_error("per-satellite antenna count does not match total_tx_antennas / satellites");
    arrays.validate();
    if (arrays.rx < num_satellites)
        config_error("arrays.rx_antennas must be at least swarm.satellites");
    if (!(total_tx_power > 0.0) || !std::isfinite(total_tx_power))
        config_error("power.total_tx_dbw must be finite");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        config_error("power.noise_dbw must be finite");
    if (!(min_elevation > 0.0 && min_elevation < kPi / 2))
        config_error("simulation.min_elevation_deg must lie in (0, 90)");
    if (!(inter_sat_distance >= 0.0))
        config_error("swarm.inter_sat_distance_km must be non-negative");
    if (trials < 1)
        config_error("simulation.trials must be at least 1");

    const double theta_lo = min_elevation - 1e-12;
    const double theta_hi = kPi - min_elevation + 1e-12;
    const double theta_fixed = theta_mean_fixed();
    if (theta_fixed < theta_lo || theta_fixed > theta_hi)
        config_error("sweep.theta_mean_deg must lie in [min_elevation, 180 - min_elevation]");
    if (sweep.time_points < 1)
        config_error("sweep.time_points must be at least 1");
    if (sweep.time_average && sweep.axis == SweepAxis::MeanElevationTime)
        config_error("sweep.time_average cannot be combined with the mean_elevation axis");

    if (sweep.values.empty())
        config_error("sweep values must not be empty");
    for (std::size_t i = 0; i < sweep.values.size(); ++i)
    {
        const double v = sweep.values[i];
        if (i > 0 && !(v > sweep.values[i - 1]))
            config_error("sweep values must be strictly increasing");
        switch (sweep.axis)
        {
        case SweepAxis::InterSatDistance:
            if (!(v >= 0.0))
                config_error("sweep distances must be non-negative");
            break;
        case SweepAxis::TransmitPower:
            if (!(v > 0.0) || !std::isfinite(v))
                config_error("sweep powers must be finite");
            break;
        case SweepAxis::MeanElevationTime:
            if (v < theta_lo || v > theta_hi)
                config_error("sweep elevations must lie in [min_elevation, 180 - min_elevation]");
            break;
        }
    }
}

ScenarioConfig parse_scenario(std::string_view yaml_text, std::span<const std::string> overrides,
                              std::optional<SweepAxis> required_axis)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string(yaml_text));
    }
    catch (const YAML::Exception &e)
    {
        config_error(std::string("scenario is not valid YAML: ") + e.what());
    }
    if (!root || root.IsNull())
        root = YAML::Node(YAML::NodeType::Map);
    for (const auto &o : overrides)
        apply_override(root, o);
    return from_node(root, required_axis);
}

ScenarioConfig load_scenario(const std::filesystem::path &path, std::span<const std::string> overrides,
                             std::optional<SweepAxis> required_axis)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open scenario file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str(), overrides, required_axis);
}

std::string canonical_json(const ScenarioConfig &cfg)
{
    using nlohmann::json;
    json j;
    j["orbit"] = {{"altitude_m", cfg.orbit.altitude}, {"earth_radius_m", cfg.orbit.earth_radius}};
    j["arrays"] = {{"carrier_hz", cfg.arrays.carrier_frequency},
                   {"rx", cfg.arrays.rx},
                   {"tx_per_satellite", cfg.arrays.tx_per_satellite},
                   {"total_tx_antennas", cfg.total_tx_antennas}};
    j["swarm"] = {{"satellites", cfg.num_satellites},
                  {"inter_sat_distance_m", cfg.inter_sat_distance},
                  {"pointing", cfg.pointing.mode == PointingMode::TrackReceiver ? "track_receiver" : "fixed_rotation"},
                  {"fixed_rotation_rad", cfg.pointing.fixed_rotation}};
    j["power"] = {{"total_tx_w", cfg.total_tx_power}, {"noise_w", cfg.noise_power}};
    const LossConfig &l = cfg.loss;
    j["losses"] = {{"tx_gain_db", l.tx_gain_db},
                   {"rx_gain_db", l.rx_gain_db},
                   {"shadow_fading", l.shadow_fading},
                   {"shadow_sigma_db", l.shadow_sigma_db},
                   {"gas", l.gas},
                   {"gas_zenith_db", l.gas_zenith_db},
                   {"scintillation", l.scintillation},
                   {"scintillation_sigma_db", l.scintillation_sigma_db},
                   {"clutter_db", l.clutter_db},
                   {"random_phase", l.random_phase},
                   {"sigma_alpha_sq", l.sigma_alpha_sq ? json(*l.sigma_alpha_sq) : json(nullptr)}};
    j["sweep"] = {{"axis", axis_name(cfg.sweep.axis)},
                  {"values", cfg.sweep.values},
                  {"theta_mean_rad", cfg.sweep.fixed_theta_mean ? json(*cfg.sweep.fixed_theta_mean) : json(nullptr)},
                  {"time_average", cfg.sweep.time_average},
                  {"time_points", cfg.sweep.time_points}};
    j["simulation"] = {{"seed", cfg.seed}, {"trials", cfg.trials}, {"min_elevation_rad", cfg.min_elevation}};
    return j.dump();
}

std::string config_digest(const ScenarioConfig &cfg)
{
    const std::string text = canonical_json(cfg);
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1)
        fail(ErrorCode::NumericalError, "config_digest: SHA-256 failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < 8 && i < length; ++i)
    {
        out.push_back(kHex[hash[i] >> 4]);
        out.push_back(kHex[hash[i] & 0xf]);
    }
    return out;
}

} // namespace satswarm
