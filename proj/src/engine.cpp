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

#include "satswarm/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "satswarm/channel.hpp"
#include "satswarm/equalization.hpp"
#include "satswarm/precoding.hpp"

namespace satswarm
{

namespace
{

constexpr std::size_t kMetricCount = 5;
using MetricArray = std::array<double, kMetricCount>;

MetricArray to_array(const RateMetrics &m) { return {m.r_opt, m.r_per, m.r_lin_geo, m.r_lin_opt_eq, m.r_upper}; }

RateMetrics from_array(const MetricArray &a) { return {a[0], a[1], a[2], a[3], a[4]}; }

struct PointPlan
{
    double ds = 0.0;
    double total_power = 0.0;
    std::vector<double> thetas;
    std::vector<std::uint64_t> time_indices;
};

std::vector<PointPlan> plan_sweep(const ScenarioConfig &cfg)
{
    std::vector<double> thetas;
    std::vector<std::uint64_t> time_indices;
    if (cfg.sweep.time_average)
    {
        thetas = cfg.time_grid();
        for (std::size_t i = 0; i < thetas.size(); ++i)
            time_indices.push_back(i);
    }
    else
    {
        thetas = {cfg.theta_mean_fixed()};
        time_indices = {0};
    }

    std::vector<PointPlan> plans;
    for (std::size_t p = 0; p < cfg.sweep.values.size(); ++p)
    {
        const double v = cfg.sweep.values[p];
        PointPlan plan{cfg.inter_sat_distance, cfg.total_tx_power, thetas, time_indices};
        switch (cfg.sweep.axis)
        {
        case SweepAxis::InterSatDistance:
            plan.ds = v;
            break;
        case SweepAxis::TransmitPower:
            plan.total_power = v;
            break;
        case SweepAxis::MeanElevationTime:
            // Each elevation is its own instant of the pass.
            plan.thetas = {v};
            plan.time_indices = {p};
            break;
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

double median_of(std::vector<double> v)
{
    const std::size_t n = v.size();
    std::sort(v.begin(), v.end());
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

RateReport run_point(const ScenarioConfig &cfg, double theta_mean, double ds, double total_power,
                     std::uint64_t trial, std::uint64_t time_index)
{
    const SwarmGeometry swarm = place_swarm(theta_mean, ds, cfg.num_satellites, cfg.orbit, cfg.pointing);
    RandomStream rng(cfg.seed, {time_index, trial});
    const ChannelSet ch = channel_set(swarm, cfg.arrays, cfg.loss, rng);

    const double noise = cfg.noise_power;
    const double rho = total_power / cfg.num_satellites;

    RateReport report;
    report.r_opt = capacity(ch.stacked_true, total_power, noise);

    const Precoder G = geometric_precoder(swarm, cfg.arrays, rho);
    report.r_per = rate_ideal_rx(ch.stacked_true, G, noise);

    const Equalizer w_opt = optimal_equalizer(ch.true_blocks, G, noise);
    report.sinr_opt_eq = sinr_per_stream(w_opt, ch.true_blocks, G, noise);
    report.r_lin_opt_eq = rate_linear(report.sinr_opt_eq);

    const double sigma_bar_sq = normalized_noise(noise, ch.sigma_alpha_sq, cfg.arrays.tx_per_satellite, rho);
    const Equalizer w_geo = geometric_equalizer(ch.rx_steering, sigma_bar_sq);
    report.sinr_geo = sinr_per_stream(w_geo, ch.true_blocks, G, noise);
    report.r_lin_geo = rate_linear(report.sinr_geo);

    report.r_upper = rate_upper_geo(ch.rx_steering, sigma_bar_sq);
    return report;
}

SweepResult run_sweep(const ScenarioConfig &cfg, const RunOptions &options)
{
    cfg.validate();
    const std::vector<PointPlan> plans = plan_sweep(cfg);
    const auto trials = static_cast<std::size_t>(cfg.trials);
    const std::size_t units = plans.size() * trials;

    std::vector<MetricArray> samples(units);
    std::vector<std::exception_ptr> errors(units);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&]
    {
        for (;;)
        {
            const std::size_t u = next.fetch_add(1);
            if (u >= units || stop.load())
                return;
            const PointPlan &plan = plans[u / trials];
            const std::uint64_t trial = u % trials;
            try
            {
                MetricArray acc{};
                for (std::size_t j = 0; j < plan.thetas.size(); ++j)
                {
                    const MetricArray r = to_array(
                        run_point(cfg, plan.thetas[j], plan.ds, plan.total_power, trial, plan.time_indices[j]));
                    for (std::size_t k = 0; k < kMetricCount; ++k)
                        acc[k] += r[k];
                }
                for (auto &v : acc)
                    v /= static_cast<double>(plan.thetas.size());
                samples[u] = acc;
            }
            catch (...)
            {
                errors[u] = std::current_exception();
                stop.store(true);
            }
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(units, 1)));
    if (threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    for (std::size_t u = 0; u < units; ++u)
    {
        if (!errors[u])
            continue;
        std::ostringstream where;
        where << "sweep point " << axis_name(cfg.sweep.axis) << " = "
              << axis_display_value(cfg.sweep.axis, cfg.sweep.values[u / trials]) << ' '
              << axis_unit(cfg.sweep.axis) << ": ";
        try
        {
            std::rethrow_exception(errors[u]);
        }
        catch (const Error &e)
        {
            throw Error(e.code(), where.str() + e.what());
        }
        catch (const std::exception &e)
        {
            throw Error(ErrorCode::NumericalError, where.str() + e.what());
        }
    }

    SweepResult result;
    result.axis = cfg.sweep.axis;
    const std::string digest = config_digest(cfg);
    for (std::size_t p = 0; p < plans.size(); ++p)
    {
        SweepRecord rec;
        rec.axis_value = axis_display_value(cfg.sweep.axis, cfg.sweep.values[p]);
        rec.num_trials = cfg.trials;
        rec.config_digest = digest;

        MetricArray mean{}, sd{}, med{};
        for (std::size_t k = 0; k < kMetricCount; ++k)
        {
            std::vector<double> column(trials);
            for (std::size_t t = 0; t < trials; ++t)
                column[t] = samples[p * trials + t][k];
            double sum = 0.0;
            for (double v : column)
                sum += v;
            mean[k] = sum / static_cast<double>(trials);
            double ss = 0.0;
            for (double v : column)
                ss += (v - mean[k]) * (v - mean[k]);
            sd[k] = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
            med[k] = median_of(std::move(column));
        }
        rec.mean = from_array(mean);
        rec.std = from_array(sd);
        rec.median = from_array(med);
        result.records.push_back(std::move(rec));
    }
    return result;
}

} // namespace satswarm
