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

// satswarm command-line front end. Talks to the simulator only through the
// C API in satswarm.h.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satswarm/satswarm.h"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNoRoot = 2;
constexpr int kExitNumerical = 3;

constexpr double kPi = 3.14159265358979323846;

struct ScenarioDeleter
{
    void operator()(ssw_scenario *s) const { ssw_scenario_free(s); }
};
struct ResultsDeleter
{
    void operator()(ssw_results *r) const { ssw_results_free(r); }
};
using ScenarioPtr = std::unique_ptr<ssw_scenario, ScenarioDeleter>;
using ResultsPtr = std::unique_ptr<ssw_results, ResultsDeleter>;

struct SweepOptions
{
    std::string config;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    std::string format = "csv";
    std::optional<long long> seed;
    std::optional<int> trials;
    unsigned threads = 0;
};

struct SpacingOptions
{
    std::optional<double> theta_deg;
    double theta_start = 30.0;
    double theta_stop = 150.0;
    double theta_step = 1.0;
    int nr = 100;
    double d0_km = 600.0;
    int k = 1;
};

void report(const char *context, ssw_status st)
{
    std::fprintf(stderr, "satswarm: %s: %s: %s\n", context, ssw_status_string(st), ssw_last_error());
}

bool is_numerical(ssw_status st)
{
    return st == SSW_E_NUMERICAL || st == SSW_E_NO_CONVERGENCE || st == SSW_E_NO_ROOT;
}

// Loads the scenario and applies overrides in command-line order; --seed and
// --trials go last.
int build_scenario(const SweepOptions &opt, std::optional<ssw_axis> axis, ScenarioPtr &out)
{
    ssw_scenario *raw = nullptr;
    ssw_status st = opt.config.empty() ? ssw_scenario_default(&raw) : ssw_scenario_load(opt.config.c_str(), &raw);
    if (st != SSW_OK)
    {
        report(opt.config.empty() ? "default scenario" : opt.config.c_str(), st);
        return kExitConfig;
    }
    out.reset(raw);

    std::vector<std::string> sets = opt.overrides;
    if (opt.seed)
        sets.push_back("simulation.seed=" + std::to_string(*opt.seed));
    if (opt.trials)
        sets.push_back("simulation.trials=" + std::to_string(*opt.trials));
    for (const std::string &s : sets)
    {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
        {
            std::fprintf(stderr, "satswarm: --set expects key=value, got '%s'\n", s.c_str());
            return kExitConfig;
        }
        const std::string key = s.substr(0, eq);
        const std::string value = s.substr(eq + 1);
        st = ssw_scenario_set(out.get(), key.c_str(), value.c_str());
        if (st != SSW_OK)
        {
            report(s.c_str(), st);
            return kExitConfig;
        }
    }
    if (axis)
    {
        st = ssw_scenario_set_axis(out.get(), *axis);
        if (st != SSW_OK)
        {
            report("sweep axis", st);
            return kExitConfig;
        }
    }
    st = ssw_scenario_validate(out.get());
    if (st != SSW_OK)
    {
        report("validation", st);
        return kExitConfig;
    }
    return kExitOk;
}

const char *axis_label(ssw_axis axis)
{
    switch (axis)
    {
    case SSW_AXIS_INTER_SAT_DISTANCE:
        return "inter_sat_distance [km]";
    case SSW_AXIS_TRANSMIT_POWER:
        return "transmit_power [dBW]";
    case SSW_AXIS_MEAN_ELEVATION:
        return "mean_elevation [deg]";
    }
    return "axis";
}

void print_summary(const ssw_results *results)
{
    const size_t n = ssw_results_size(results);
    ssw_axis axis = SSW_AXIS_INTER_SAT_DISTANCE;
    ssw_results_axis(results, &axis);

    struct Column
    {
        const char *name;
        double ssw_rates::*field;
    };
    const Column columns[] = {{"r_opt", &ssw_rates::r_opt},
                              {"r_per", &ssw_rates::r_per},
                              {"r_lin_geo", &ssw_rates::r_lin_geo},
                              {"r_lin_opt_eq", &ssw_rates::r_lin_opt_eq},
                              {"r_upper", &ssw_rates::r_upper}};

    std::vector<ssw_record> records(n);
    for (size_t i = 0; i < n; ++i)
        ssw_results_record(results, i, &records[i]);

    std::printf("%zu points over %s, %d trials per point\n", n, axis_label(axis), n ? records[0].num_trials : 0);
    std::printf("%-14s %12s %12s %12s  [bit/s/Hz]\n", "metric", "min", "max", "mean");
    for (const Column &c : columns)
    {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
        for (const ssw_record &r : records)
        {
            const double v = r.mean.*c.field;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        std::printf("%-14s %12.6f %12.6f %12.6f\n", c.name, lo, hi, n ? sum / double(n) : 0.0);
    }
}

int cmd_sweep(const std::string &name, ssw_axis axis, const SweepOptions &opt)
{
    ScenarioPtr scenario;
    if (const int rc = build_scenario(opt, axis, scenario); rc != kExitOk)
        return rc;

    ssw_results *raw = nullptr;
    const ssw_status st = ssw_run_sweep(scenario.get(), opt.threads, &raw);
    if (st != SSW_OK)
    {
        report(name.c_str(), st);
        return is_numerical(st) ? kExitNumerical : kExitConfig;
    }
    ResultsPtr results(raw);

    const ssw_format format = opt.format == "json" ? SSW_FORMAT_JSON : SSW_FORMAT_CSV;
    char path[4096];
    const ssw_status wst =
        ssw_results_write(results.get(), format, opt.out_dir.c_str(), name.c_str(), path, sizeof path);
    if (wst != SSW_OK)
    {
        report("writing results", wst);
        return kExitConfig;
    }
    print_summary(results.get());
    std::printf("wrote %s\n", path);
    return kExitOk;
}

int cmd_validate(const SweepOptions &opt)
{
    ScenarioPtr scenario;
    if (const int rc = build_scenario(opt, std::nullopt, scenario); rc != kExitOk)
        return rc;
    char digest[32];
    ssw_scenario_digest(scenario.get(), digest, sizeof digest);
    std::printf("configuration ok, digest %s\n", digest);
    return kExitOk;
}

int cmd_spacing(const SpacingOptions &opt)
{
    std::vector<double> thetas;
    if (opt.theta_deg)
        thetas.push_back(*opt.theta_deg);
    else
    {
        if (!(opt.theta_step > 0.0) || opt.theta_stop < opt.theta_start)
        {
            std::fprintf(stderr, "satswarm: spacing: empty theta grid\n");
            return kExitConfig;
        }
        const long count = std::lround(std::floor((opt.theta_stop - opt.theta_start) / opt.theta_step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i)
            thetas.push_back(opt.theta_start + double(i) * opt.theta_step);
    }

    std::printf("theta_deg,ds_orth_km,delta_phi\n");
    for (const double t : thetas)
    {
        ssw_spacing s{};
        const ssw_status st = ssw_optimal_spacing(t * kPi / 180.0, opt.nr, opt.d0_km * 1e3, opt.k, &s);
        if (st != SSW_OK)
        {
            std::fflush(stdout);
            std::fprintf(stderr, "satswarm: spacing at theta = %.6g deg: %s: %s\n", t, ssw_status_string(st),
                         ssw_last_error());
            return st == SSW_E_NO_ROOT ? kExitNoRoot : st == SSW_E_NUMERICAL || st == SSW_E_NO_CONVERGENCE
                                                           ? kExitNumerical
                                                           : kExitConfig;
        }
        std::printf("%.10g,%.12g,%.17g\n", t, s.ds_orth_m / 1e3, s.delta_phi);
    }
    return kExitOk;
}

void add_scenario_flags(CLI::App *sub, SweepOptions &opt, bool with_output)
{
    sub->add_option("--config", opt.config, "Scenario YAML file")->check(CLI::ExistingFile);
    sub->add_option("--set", opt.overrides, "Override section.key=value (repeatable)")->take_all();
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--trials", opt.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    if (!with_output)
        return;
    sub->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--threads", opt.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"satswarm: cooperative satellite swarm downlink simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ssw_version()));

    SpacingOptions spacing;
    auto *sp = app.add_subcommand("spacing", "Inter-satellite distance for orthogonal receive steering vectors");
    sp->add_option("--theta", spacing.theta_deg, "Elevation of the leading satellite [deg]; omit for a grid");
    sp->add_option("--theta-start", spacing.theta_start, "Grid start [deg]")->capture_default_str();
    sp->add_option("--theta-stop", spacing.theta_stop, "Grid stop [deg]")->capture_default_str();
    sp->add_option("--theta-step", spacing.theta_step, "Grid step [deg]")->capture_default_str();
    sp->add_option("--nr", spacing.nr, "Receive antennas")->capture_default_str();
    sp->add_option("--d0", spacing.d0_km, "Orbit altitude [km]")->capture_default_str();
    sp->add_option("--k", spacing.k, "Harmonic index")->capture_default_str();

    SweepOptions ds_opt, power_opt, pass_opt, validate_opt;
    auto *ds = app.add_subcommand("sweep-ds", "Rates versus inter-satellite distance");
    add_scenario_flags(ds, ds_opt, true);
    auto *pw = app.add_subcommand("sweep-power", "Rates versus total transmit power");
    add_scenario_flags(pw, power_opt, true);
    auto *ps = app.add_subcommand("pass", "Rates versus mean elevation over a pass");
    add_scenario_flags(ps, pass_opt, true);
    auto *vc = app.add_subcommand("validate-config", "Parse and validate a scenario");
    add_scenario_flags(vc, validate_opt, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (sp->parsed())
        return cmd_spacing(spacing);
    if (ds->parsed())
        return cmd_sweep("sweep-ds", SSW_AXIS_INTER_SAT_DISTANCE, ds_opt);
    if (pw->parsed())
        return cmd_sweep("sweep-power", SSW_AXIS_TRANSMIT_POWER, power_opt);
    if (ps->parsed())
        return cmd_sweep("pass", SSW_AXIS_MEAN_ELEVATION, pass_opt);
    return cmd_validate(validate_opt);
}
