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

#include "satswarm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace satswarm
{

void OrbitConfig::validate() const
{
    if (!(altitude > 0.0))
        fail(ErrorCode::InvalidConfig, "orbit altitude must be positive");
    if (!(earth_radius > 0.0))
        fail(ErrorCode::InvalidConfig, "earth radius must be positive");
}

std::vector<double> SwarmGeometry::elevations() const
{
    std::vector<double> out;
    out.reserve(satellites.size());
    for (const auto &s : satellites)
        out.push_back(s.elevation);
    return out;
}

std::vector<double> SwarmGeometry::aods() const
{
    std::vector<double> out;
    out.reserve(satellites.size());
    for (const auto &s : satellites)
        out.push_back(s.aod);
    return out;
}

bool SwarmGeometry::degenerate() const
{
    for (std::size_t i = 1; i < satellites.size(); ++i)
        if (satellites[i].elevation == satellites[i - 1].elevation)
            return true;
    return false;
}

double polar_from_elevation(double theta, const OrbitConfig &orbit)
{
    if (!(theta >= 0.0 && theta <= kPi))
        fail(ErrorCode::InvalidInput, "elevation must lie in [0, pi]");
    return theta + std::asin(orbit.earth_radius * std::cos(theta) / orbit.orbital_radius());
}

double slant_range(double vartheta, const OrbitConfig &orbit)
{
    const double r0 = orbit.orbital_radius();
    const double d0 = orbit.altitude;
    return std::sqrt(d0 * d0 + 2.0 * orbit.earth_radius * r0 * (1.0 - std::sin(vartheta)));
}

double elevation_from_polar(double vartheta, const OrbitConfig &orbit)
{
    const double r0 = orbit.orbital_radius();
    const double x = r0 * std::cos(vartheta);
    double y = r0 * std::sin(vartheta) - orbit.earth_radius;
    if (y < 0.0)
    {
        // A few ulps below the horizon is rounding, not geometry.
        if (y < -1e-9 * r0)
        {
            std::ostringstream msg;
            msg << "satellite at polar angle " << vartheta << " rad is below the horizon";
            fail(ErrorCode::InvalidConfig, msg.str());
        }
        y = 0.0;
    }
    return std::atan2(y, x);
}

double polar_spacing(double ds, const OrbitConfig &orbit)
{
    const double r0 = orbit.orbital_radius();
    if (ds < 0.0 || ds > 2.0 * r0)
        fail(ErrorCode::InvalidInput, "inter-satellite distance outside [0, 2 r0]");
    return 2.0 * std::asin(ds / (2.0 * r0));
}

double horizon_polar_angle(const OrbitConfig &orbit)
{
    return std::asin(orbit.earth_radius / orbit.orbital_radius());
}

SatelliteState make_satellite(double vartheta, const OrbitConfig &orbit, const PointingPolicy &pointing)
{
    SatelliteState s;
    s.polar_angle = vartheta;
    s.elevation = elevation_from_polar(vartheta, orbit);
    s.slant_range = slant_range(vartheta, orbit);

    if (pointing.mode == PointingMode::TrackReceiver)
    {
        s.rotation = s.elevation - kPi / 2;
        s.aod = 0.0;
        return s;
    }

    s.rotation = pointing.fixed_rotation;
    s.aod = s.elevation - s.rotation - kPi / 2;
    const double eta_lo = std::min(-kPi / 2, s.elevation - kPi);
    const double eta_hi = std::min(kPi / 2, s.elevation);
    if (s.rotation < eta_lo || s.rotation > eta_hi || std::abs(s.aod) > kPi / 2)
    {
        std::ostringstream msg;
        msg << "fixed rotation " << s.rotation << " rad leaves the AoD " << s.aod
            << " rad outside the transmit cone at elevation " << s.elevation << " rad";
        fail(ErrorCode::InvalidConfig, msg.str());
    }
    return s;
}

SwarmGeometry place_swarm(double theta_mean, double ds, int num_satellites, const OrbitConfig &orbit,
                          const PointingPolicy &pointing)
{
    orbit.validate();
    if (num_satellites < 1)
        fail(ErrorCode::InvalidInput, "swarm needs at least one satellite");
    if (ds < 0.0)
        fail(ErrorCode::InvalidInput, "inter-satellite distance must be non-negative");
    if (!(theta_mean >= 0.0 && theta_mean <= kPi))
        fail(ErrorCode::InvalidInput, "mean elevation must lie in [0, pi]");

    SwarmGeometry swarm;
    swarm.orbit = orbit;
    swarm.inter_sat_distance = ds;
    swarm.polar_spacing = polar_spacing(ds, orbit);

    std::vector<double> offsets(static_cast<std::size_t>(num_satellites));
    for (int i = 0; i < num_satellites; ++i)
        offsets[static_cast<std::size_t>(i)] = (i - 0.5 * (num_satellites - 1)) * swarm.polar_spacing;
    const double reach = offsets.back();

    const double horizon = horizon_polar_angle(orbit);
    double lo = horizon + reach;
    double hi = kPi - horizon - reach;
    if (lo > hi)
        fail(ErrorCode::InvalidConfig, "swarm is longer than the visible arc of the orbit");

    auto mean_elevation = [&](double centre)
    {
        double acc = 0.0;
        for (double off : offsets)
            acc += elevation_from_polar(centre + off, orbit);
        return acc / num_satellites;
    };

    // Mean elevation is increasing in the centre polar angle.
    const double f_lo = mean_elevation(lo) - theta_mean;
    const double f_hi = mean_elevation(hi) - theta_mean;
    if (f_lo > 0.0 || f_hi < 0.0)
    {
        std::ostringstream msg;
        msg << "mean elevation " << rad_to_deg(theta_mean)
            << " deg is not reachable with every satellite above the horizon";
        fail(ErrorCode::InvalidConfig, msg.str());
    }

    constexpr int kMaxIterations = 200;
    constexpr double kTolerance = 1e-9;
    double centre = 0.5 * (lo + hi);
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxIterations; ++it)
    {
        centre = 0.5 * (lo + hi);
        residual = mean_elevation(centre) - theta_mean;
        if (std::abs(residual) <= 1e-13 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon())
            break;
        (residual < 0.0 ? lo : hi) = centre;
    }
    if (!(std::abs(residual) <= kTolerance))
        fail(ErrorCode::NoConvergence, "swarm placement did not converge");

    swarm.satellites.reserve(offsets.size());
    for (double off : offsets)
        swarm.satellites.push_back(make_satellite(centre + off, orbit, pointing));
    return swarm;
}

} // namespace satswarm
