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

#include "satswarm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace satswarm
{

namespace
{

// Elevation above the local horizon, in degrees.
double horizon_elevation_deg(double theta) { return rad_to_deg(std::min(theta, kPi - theta)); }

double checked_horizon_elevation_deg(double theta)
{
    const double e = horizon_elevation_deg(theta);
    if (!(e >= 5.0 && e <= 90.0))
    {
        std::ostringstream msg;
        msg << "elevation " << e << " deg is outside the loss tables (5 to 90 deg)";
        fail(ErrorCode::InvalidConfig, msg.str());
    }
    return e;
}

} // namespace

void ArrayConfig::validate() const
{
    if (tx_per_satellite < 1)
        fail(ErrorCode::InvalidConfig, "need at least one transmit antenna per satellite");
    if (rx < 1)
        fail(ErrorCode::InvalidConfig, "need at least one receive antenna");
    if (!(carrier_frequency > 0.0))
        fail(ErrorCode::InvalidConfig, "carrier frequency must be positive");
}

void LossConfig::validate() const
{
    for (double s : shadow_sigma_db)
        if (!(s >= 0.0))
            fail(ErrorCode::InvalidConfig, "shadow fading sigma must be non-negative");
    if (!(gas_zenith_db >= 0.0))
        fail(ErrorCode::InvalidConfig, "gas loss must be non-negative");
    if (!(scintillation_sigma_db >= 0.0))
        fail(ErrorCode::InvalidConfig, "scintillation sigma must be non-negative");
    if (!std::isfinite(clutter_db) || !std::isfinite(tx_gain_db) || !std::isfinite(rx_gain_db))
        fail(ErrorCode::InvalidConfig, "gains and clutter loss must be finite");
    if (sigma_alpha_sq && !(*sigma_alpha_sq > 0.0))
        fail(ErrorCode::InvalidConfig, "sigma_alpha_sq override must be positive");
}

ComplexVector rx_steering(double theta, int num_rx)
{
    if (num_rx < 1)
        fail(ErrorCode::InvalidInput, "rx_steering: need at least one antenna");
    ComplexVector a(num_rx);
    const double c = kPi * std::cos(theta);
    for (int m = 0; m < num_rx; ++m)
        a(m) = std::polar(1.0, c * m);
    return a;
}

ComplexVector tx_steering(double aod, int num_tx)
{
    if (num_tx < 1)
        fail(ErrorCode::InvalidInput, "tx_steering: need at least one antenna");
    ComplexVector b(num_tx);
    const double s = -kPi * std::sin(aod);
    for (int n = 0; n < num_tx; ++n)
        b(n) = std::polar(1.0, s * n);
    return b;
}

ComplexMatrix approx_channel(Complex alpha, const ComplexVector &a, const ComplexVector &b)
{
    return alpha * a * b.adjoint();
}

double shadow_sigma_db(double theta, const LossConfig &cfg)
{
    const double e = checked_horizon_elevation_deg(theta);
    const auto bin = std::min<std::size_t>(8, static_cast<std::size_t>((e - 5.0) / 10.0));
    return cfg.shadow_sigma_db[bin];
}

LinkBudget link_budget(const SatelliteState &sat, const ArrayConfig &arrays, const LossConfig &cfg,
                       RandomStream &rng)
{
    if (!(sat.slant_range > 0.0))
        fail(ErrorCode::InvalidInput, "link_budget: slant range must be positive");

    const double z_shadow = rng.normal();
    const double z_scint = rng.normal();
    const double u_phase = rng.uniform();

    LinkBudget lb;
    lb.fspl_db = 20.0 * std::log10(2.0 * arrays.wavenumber() * sat.slant_range);
    lb.tx_gain_db = cfg.tx_gain_db;
    lb.rx_gain_db = cfg.rx_gain_db;
    lb.clutter_db = cfg.clutter_db;
    if (cfg.shadow_fading)
        lb.shadow_fading_db = shadow_sigma_db(sat.elevation, cfg) * z_shadow;
    if (cfg.gas)
        lb.gas_db = cfg.gas_zenith_db / std::sin(deg_to_rad(checked_horizon_elevation_deg(sat.elevation)));
    if (cfg.scintillation)
    {
        const double e = deg_to_rad(checked_horizon_elevation_deg(sat.elevation));
        lb.scintillation_db = cfg.scintillation_sigma_db * std::pow(std::sin(e), -1.2) * z_scint;
    }
    if (cfg.random_phase)
        lb.atmospheric_phase = 2.0 * kPi * u_phase;
    return lb;
}

Complex reference_gain(const SatelliteState &sat, const ArrayConfig &arrays, const LinkBudget &budget)
{
    const double magnitude = std::pow(10.0, -budget.total_db() / 20.0);
    return std::polar(magnitude, -(arrays.wavenumber() * sat.slant_range + budget.atmospheric_phase));
}

ComplexMatrix true_channel(const SatelliteState &sat, const OrbitConfig &orbit, const ArrayConfig &arrays,
                           const LinkBudget &budget)
{
    const int Nr = arrays.rx;
    const int Nt = arrays.tx_per_satellite;
    const double r0 = orbit.orbital_radius();
    const double spacing = arrays.antenna_spacing();
    const double nu = arrays.wavenumber();

    // Vector from receive antenna 0 to transmit antenna 0.
    const double px = r0 * std::cos(sat.polar_angle);
    const double py = r0 * std::sin(sat.polar_angle) - orbit.earth_radius;
    const double d00 = sat.slant_range;
    const double vx = std::cos(sat.rotation);
    const double vy = std::sin(sat.rotation);

    const Complex common = reference_gain(sat, arrays, budget);

    ComplexMatrix H(Nr, Nt);
    for (int n = 0; n < Nt; ++n)
    {
        for (int m = 0; m < Nr; ++m)
        {
            // Offset of the pair relative to (0, 0); q = |p + delta|^2 - |p|^2.
            const double dx = spacing * (n * vx - m);
            const double dy = spacing * (n * vy);
            const double q = 2.0 * (px * dx + py * dy) + dx * dx + dy * dy;
            const double dmn = std::sqrt(d00 * d00 + q);
            const double excess = q / (dmn + d00);
            H(m, n) = common * std::polar(d00 / dmn, -nu * excess);
        }
    }
    return H;
}

ChannelSet channel_set(const SwarmGeometry &swarm, const ArrayConfig &arrays, const LossConfig &cfg,
                       RandomStream &rng)
{
    arrays.validate();
    const auto ns = static_cast<int>(swarm.size());
    if (arrays.rx < ns)
        fail(ErrorCode::InvalidConfig, "receiver needs at least as many antennas as satellites");

    ChannelSet set;
    set.rx_steering.resize(arrays.rx, ns);
    double mean_det_gain = 0.0;
    for (int l = 0; l < ns; ++l)
    {
        const auto &sat = swarm.satellites[static_cast<std::size_t>(l)];
        const LinkBudget lb = link_budget(sat, arrays, cfg, rng);
        const ComplexVector a = rx_steering(sat.elevation, arrays.rx);
        const ComplexVector b = tx_steering(sat.aod, arrays.tx_per_satellite);
        const Complex alpha = reference_gain(sat, arrays, lb);

        set.true_blocks.push_back(true_channel(sat, swarm.orbit, arrays, lb));
        set.approx_blocks.push_back(approx_channel(alpha, a, b));
        set.rx_steering.col(l) = a;
        set.tx_steering.push_back(b);
        set.alpha.push_back(alpha);
        set.budgets.push_back(lb);
        mean_det_gain += std::pow(10.0, -lb.deterministic_db() / 10.0);
    }
    set.stacked_true = hconcat(set.true_blocks);
    set.sigma_alpha_sq = cfg.sigma_alpha_sq.value_or(mean_det_gain / ns);
    return set;
}

} // namespace satswarm
