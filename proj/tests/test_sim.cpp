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

#include "catch_amalgamated.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <set>
#include <fstream>
#include <sstream>

#include "satswarm/engine.hpp"
#include "satswarm/results_io.hpp"
#include "satswarm/scenario.hpp"

using namespace satswarm;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::EndsWith;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

ErrorCode code_of(const std::function<void()> &f)
{
    try
    {
        f();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    return ErrorCode{};
}

ScenarioConfig small_ds_sweep()
{
    return parse_scenario(R"(
sweep:
  axis: inter_sat_distance
  values: [5, 12, 40]
simulation:
  trials: 6
  seed: 11
)");
}

} // namespace

TEST_CASE("Sim - Default scenario")
{
    const ScenarioConfig cfg = parse_scenario("");
    CHECK(cfg.orbit.altitude == 600e3);
    CHECK(cfg.arrays.carrier_frequency == 20e9);
    CHECK(cfg.total_tx_antennas == 60);
    CHECK(cfg.arrays.tx_per_satellite == 20);
    CHECK(cfg.arrays.rx == 100);
    CHECK(cfg.num_satellites == 3);
    CHECK_THAT(linear_to_db(cfg.total_tx_power), WithinAbs(10.0, 1e-12));
    CHECK_THAT(linear_to_db(cfg.noise_power), WithinAbs(-120.0, 1e-12));
    CHECK_THAT(rad_to_deg(cfg.min_elevation), WithinAbs(30.0, 1e-12));
    CHECK(cfg.loss.tx_gain_db == 17.8);
    CHECK(cfg.loss.rx_gain_db == 20.0);
    CHECK(cfg.trials == 200);
    CHECK(cfg.sweep.time_points == 121);
    CHECK_THAT(cfg.per_sat_power(), WithinRel(10.0 / 3.0, 1e-12));
    REQUIRE(cfg.sweep.values.size() == 80);
    CHECK(cfg.sweep.values.front() == 1e3);
    CHECK(cfg.sweep.values.back() == 80e3);

    const auto grid = cfg.time_grid();
    REQUIRE(grid.size() == 121);
    CHECK_THAT(grid.front(), WithinAbs(deg_to_rad(30.0), 1e-15));
    CHECK_THAT(grid.back(), WithinAbs(deg_to_rad(150.0), 1e-12));
}

TEST_CASE("Sim - Scenario parsing")
{
    const ScenarioConfig cfg = parse_scenario(R"(
orbit:
  altitude_km: 550
arrays:
  carrier_ghz: 28
  total_tx_antennas: 48
  rx_antennas: 64
swarm:
  satellites: 4
  inter_sat_distance_km: 30
  pointing: fixed_rotation
  fixed_rotation_deg: 0
power:
  total_tx_dbw: 13
  noise_dbw: -118
losses:
  shadow_fading: false
  sigma_alpha_sq: 1.5e-15
sweep:
  axis: transmit_power
  range: {start: 0, stop: 20, step: 10}
simulation:
  seed: 99
  trials: 17
  min_elevation_deg: 25
)");
    CHECK(cfg.orbit.altitude == 550e3);
    CHECK(cfg.arrays.carrier_frequency == 28e9);
    CHECK(cfg.arrays.tx_per_satellite == 12);
    CHECK(cfg.arrays.rx == 64);
    CHECK(cfg.num_satellites == 4);
    CHECK(cfg.inter_sat_distance == 30e3);
    CHECK(cfg.pointing.mode == PointingMode::FixedRotation);
    CHECK_THAT(linear_to_db(cfg.total_tx_power), WithinAbs(13.0, 1e-12));
    CHECK_FALSE(cfg.loss.shadow_fading);
    CHECK(cfg.loss.sigma_alpha_sq == 1.5e-15);
    CHECK(cfg.sweep.axis == SweepAxis::TransmitPower);
    REQUIRE(cfg.sweep.values.size() == 3);
    CHECK_THAT(cfg.sweep.values[2], WithinRel(100.0, 1e-12));
    CHECK(cfg.seed == 99);
    CHECK(cfg.trials == 17);
}

TEST_CASE("Sim - Scenario validation")
{
    CHECK(code_of([] { parse_scenario("arrays: {total_tx_antennas: 61}"); }) == ErrorCode::InvalidConfig);
    try
    {
        parse_scenario("arrays: {total_tx_antennas: 61}\nswarm: {satellites: 3}");
    }
    catch (const Error &e)
    {
        CHECK_THAT(e.what(), ContainsSubstring("not divisible"));
    }
    CHECK(code_of([] { parse_scenario("orbit: {altitude_km: 600, colour: blue}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("extras: {a: 1}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("arrays: {rx_antennas: 2}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("sweep: {values: [3, 2]}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("sweep: {values: []}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("sweep: {axis: mean_elevation, time_average: true}"); }) ==
          ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("sweep: {axis: sideways}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("simulation: {trials: 0}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("orbit: [1, 2]"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario("orbit: {altitude_km: fast}"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { parse_scenario(": : :"); }) == ErrorCode::InvalidConfig);
    CHECK(code_of([] { load_scenario("/nonexistent/scenario.yaml"); }) == ErrorCode::IoError);
}

TEST_CASE("Sim - Overrides and the required axis")
{
    const std::vector<std::string> o{"swarm.satellites=2", "simulation.seed=5", "losses.sigma_alpha_sq=null"};
    const ScenarioConfig cfg = parse_scenario("swarm: {satellites: 4}", o);
    CHECK(cfg.num_satellites == 2);
    CHECK(cfg.arrays.tx_per_satellite == 30);
    CHECK(cfg.seed == 5);
    CHECK_FALSE(cfg.loss.sigma_alpha_sq);

    const std::vector<std::string> bad{"nosection=1"};
    CHECK(code_of([&] { parse_scenario("", bad); }) == ErrorCode::InvalidConfig);

    const ScenarioConfig p = parse_scenario("", {}, SweepAxis::TransmitPower);
    CHECK(p.sweep.axis == SweepAxis::TransmitPower);
    CHECK(p.sweep.values.size() == 9);
    CHECK(code_of([] { parse_scenario("sweep: {axis: transmit_power}", {}, SweepAxis::InterSatDistance); }) ==
          ErrorCode::InvalidConfig);

    const ScenarioConfig pass = parse_scenario("", {}, SweepAxis::MeanElevationTime);
    REQUIRE(pass.sweep.values.size() == 121);
    CHECK_THAT(pass.sweep.values.front(), WithinAbs(deg_to_rad(30.0), 1e-15));
}

TEST_CASE("Sim - Config digest")
{
    const ScenarioConfig base = parse_scenario("");
    const std::string d0 = config_digest(base);
    CHECK(d0.size() == 16);
    CHECK(config_digest(parse_scenario("")) == d0);
    CHECK(config_digest(parse_scenario("orbit: {altitude_km: 600}")) == d0);

    const std::vector<std::string> changes{"orbit.altitude_km=601",
                                           "arrays.carrier_ghz=21",
                                           "arrays.rx_antennas=64",
                                           "swarm.inter_sat_distance_km=65",
                                           "power.total_tx_dbw=11",
                                           "power.noise_dbw=-121",
                                           "losses.tx_gain_dbi=17",
                                           "losses.shadow_fading=false",
                                           "losses.gas_zenith_db=0.4",
                                           "losses.random_phase=false",
                                           "losses.sigma_alpha_sq=1e-15",
                                           "sweep.values=[1, 2]",
                                           "sweep.theta_mean_deg=60",
                                           "sweep.time_average=true",
                                           "sweep.time_points=61",
                                           "simulation.seed=2",
                                           "simulation.trials=10",
                                           "simulation.min_elevation_deg=20"};
    std::set<std::string> seen{d0};
    for (const auto &c : changes)
    {
        const std::vector<std::string> one{c};
        const std::string d = config_digest(parse_scenario("", one));
        INFO(c);
        CHECK(seen.insert(d).second);
    }
}

TEST_CASE("Sim - Single trial")
{
    ScenarioConfig cfg = parse_scenario("");

    SECTION("deterministic")
    {
        const RateReport a = run_point(cfg, kPi / 2, 70e3, 10.0, 3);
        const RateReport b = run_point(cfg, kPi / 2, 70e3, 10.0, 3);
        const RateReport c = run_point(cfg, kPi / 2, 70e3, 10.0, 4);
        CHECK(a.r_opt == b.r_opt);
        CHECK(a.r_lin_geo == b.r_lin_geo);
        CHECK(a.sinr_geo == b.sinr_geo);
        CHECK(a.r_opt != c.r_opt);
    }

    SECTION("single satellite without stochastic losses")
    {
        cfg = parse_scenario(R"(
swarm: {satellites: 1}
arrays: {total_tx_antennas: 20}
losses: {shadow_fading: false, scintillation: false, random_phase: false}
)");
        for (double deg : {35.0, 90.0, 140.0})
        {
            const RateReport r = run_point(cfg, deg_to_rad(deg), 0.0, 10.0, 0);
            CHECK_THAT(r.r_per, WithinRel(r.r_opt, 1e-6));
            CHECK_THAT(r.r_lin_geo, WithinRel(r.r_opt, 1e-6));
            CHECK_THAT(r.r_lin_opt_eq, WithinRel(r.r_opt, 1e-6));
        }
    }

    SECTION("near-capacity at 70 km")
    {
        const RateReport r = run_point(cfg, kPi / 2, 70e3, 10.0, 0);
        CHECK(r.r_lin_geo / r.r_opt > 0.99);
        CHECK(r.r_lin_geo <= r.r_per + 1e-9);
        CHECK(r.r_per <= r.r_opt + 1e-9);
        CHECK(r.sinr_geo.size() == 3);
    }
}

TEST_CASE("Sim - Sweep aggregation")
{
    const ScenarioConfig cfg = small_ds_sweep();
    const SweepResult res = run_sweep(cfg, {1});
    REQUIRE(res.records.size() == 3);
    CHECK(res.axis == SweepAxis::InterSatDistance);
    CHECK(res.records[1].axis_value == 12.0);

    // the singleton aggregate is the trial average of run_point
    const SweepRecord &rec = res.records[1];
    double sum = 0.0, sq = 0.0;
    std::vector<double> v;
    for (int t = 0; t < cfg.trials; ++t)
    {
        const double r = run_point(cfg, kPi / 2, 12e3, cfg.total_tx_power, static_cast<std::uint64_t>(t)).r_opt;
        v.push_back(r);
        sum += r;
    }
    const double mean = sum / cfg.trials;
    for (double r : v)
        sq += (r - mean) * (r - mean);
    std::sort(v.begin(), v.end());
    CHECK_THAT(rec.mean.r_opt, WithinRel(mean, 1e-14));
    CHECK_THAT(rec.std.r_opt, WithinRel(std::sqrt(sq / (cfg.trials - 1)), 1e-10));
    CHECK_THAT(rec.median.r_opt, WithinRel(0.5 * (v[2] + v[3]), 1e-14));
    CHECK(rec.num_trials == cfg.trials);
    CHECK(rec.config_digest == config_digest(cfg));

    for (const auto &r : res.records)
    {
        CHECK(r.mean.r_lin_geo <= r.mean.r_per + 1e-9);
        CHECK(r.mean.r_lin_opt_eq <= r.mean.r_per + 1e-9);
        CHECK(r.mean.r_per <= r.mean.r_opt + 1e-9);
        CHECK(r.mean.r_lin_geo <= r.mean.r_lin_opt_eq + 1e-9);
    }
}

TEST_CASE("Sim - Parallel sweeps are bit-identical")
{
    const ScenarioConfig cfg = small_ds_sweep();
    const std::string one = serialize_results(run_sweep(cfg, {1}), ResultFormat::Csv);
    CHECK(serialize_results(run_sweep(cfg, {4}), ResultFormat::Csv) == one);
    CHECK(serialize_results(run_sweep(cfg, {7}), ResultFormat::Csv) == one);
}

TEST_CASE("Sim - Power sweep is monotone")
{
    const std::vector<std::string> o{"simulation.trials=4"};
    const ScenarioConfig cfg = parse_scenario("", o, SweepAxis::TransmitPower);
    const SweepResult res = run_sweep(cfg);
    REQUIRE(res.records.size() == 9);
    CHECK(res.records.front().axis_value == -10.0);
    for (std::size_t i = 1; i < res.records.size(); ++i)
        CHECK(res.records[i].mean.r_opt >= res.records[i - 1].mean.r_opt);
}

TEST_CASE("Sim - Pass and time-averaged sweeps")
{
    SECTION("mean elevation axis")
    {
        const ScenarioConfig cfg = parse_scenario("sweep: {axis: mean_elevation, values: [30, 90, 150]}\n"
                                                  "simulation: {trials: 3}");
        const SweepResult res = run_sweep(cfg);
        REQUIRE(res.records.size() == 3);
        CHECK(res.records[1].axis_value == 90.0);
        // the zenith point sees the shortest range
        CHECK(res.records[1].mean.r_opt > res.records[0].mean.r_opt);
    }

    SECTION("time average")
    {
        const ScenarioConfig cfg =
            parse_scenario("sweep: {values: [70], time_average: true, time_points: 5}\nsimulation: {trials: 2}");
        const SweepResult res = run_sweep(cfg);
        const auto grid = cfg.time_grid();
        double acc = 0.0;
        for (int t = 0; t < 2; ++t)
            for (std::size_t j = 0; j < grid.size(); ++j)
                acc += run_point(cfg, grid[j], 70e3, cfg.total_tx_power, static_cast<std::uint64_t>(t), j).r_opt;
        CHECK_THAT(res.records[0].mean.r_opt, WithinRel(acc / 10.0, 1e-13));
    }

    SECTION("errors carry the sweep point")
    {
        // 400 km spacing pushes the outer satellites below the horizon at 30 deg
        const ScenarioConfig cfg = parse_scenario("sweep: {values: [10, 4000], theta_mean_deg: 30}\n"
                                                  "simulation: {trials: 2}");
        try
        {
            run_sweep(cfg);
            FAIL("expected an error");
        }
        catch (const Error &e)
        {
            CHECK_THAT(e.what(), ContainsSubstring("4000"));
        }
    }
}

TEST_CASE("Sim - Results serialization")
{
    const SweepResult res = run_sweep(small_ds_sweep());

    SECTION("CSV layout and round trip")
    {
        const std::string csv = serialize_results(res, ResultFormat::Csv);
        std::istringstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK(header.rfind("axis_value,r_opt,r_per,r_lin_geo,r_lin_opt_eq,r_upper,", 0) == 0);
        CHECK_THAT(header, ContainsSubstring("r_opt_std"));
        CHECK_THAT(header, EndsWith("trials,config_digest"));
        const SweepResult back = parse_results(csv, ResultFormat::Csv);
        CHECK(serialize_results(back, ResultFormat::Csv) == csv);
        CHECK(back.records[2].mean.r_upper == res.records[2].mean.r_upper);
        CHECK(back.records[0].std.r_lin_geo == res.records[0].std.r_lin_geo);
    }

    SECTION("JSON round trip")
    {
        const std::string js = serialize_results(res, ResultFormat::Json);
        const SweepResult back = parse_results(js, ResultFormat::Json);
        CHECK(serialize_results(back, ResultFormat::Json) == js);
        CHECK(serialize_results(back, ResultFormat::Csv) == serialize_results(res, ResultFormat::Csv));
    }

    SECTION("empty results are an error")
    {
        CHECK(code_of([] { serialize_results(SweepResult{}, ResultFormat::Csv); }) == ErrorCode::InvalidInput);
    }

    SECTION("files carry the digest")
    {
        const auto dir = std::filesystem::temp_directory_path() / "satswarm_io_test";
        std::filesystem::remove_all(dir);
        const auto path = write_results(res, ResultFormat::Csv, dir, "sweep-ds");
        CHECK(path.parent_path() == dir);
        CHECK(path.filename().string() == "sweep-ds_" + res.records[0].config_digest + ".csv");
        std::ifstream in(path);
        std::ostringstream text;
        text << in.rdbuf();
        CHECK(text.str() == serialize_results(res, ResultFormat::Csv));
        std::filesystem::remove_all(dir);
    }
}
