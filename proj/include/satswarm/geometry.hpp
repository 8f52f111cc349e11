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

#ifndef SATSWARM_GEOMETRY_HPP
#define SATSWARM_GEOMETRY_HPP

#include <vector>

#include "satswarm/common.hpp"

// In-plane geometry of a trail-formation swarm and a ground receiver.
//
// Earth-centred frame: the receiver sits at (0, rE), i.e. polar angle pi/2.
// A satellite at polar angle vartheta is at (r0 cos vartheta, r0 sin vartheta).
// The elevation theta is the polar angle of the satellite seen from the
// receiver, so theta = pi/2 is zenith and theta in [0, pi] is above the
// horizon. All angles are radians and all lengths are metres.

namespace satswarm
{

struct OrbitConfig
{
    double altitude = 600e3;        // d0
    double earth_radius = 6371e3;   // rE

    double orbital_radius() const { return earth_radius + altitude; }
    void validate() const;
};

enum class PointingMode
{
    TrackReceiver, // rotation chosen so that the AoD is zero
    FixedRotation, // constant rotation eta
};

struct PointingPolicy
{
    PointingMode mode = PointingMode::TrackReceiver;
    double fixed_rotation = 0.0;

    static PointingPolicy track() { return {}; }
    static PointingPolicy fixed(double eta) { return {PointingMode::FixedRotation, eta}; }
};

struct SatelliteState
{
    double polar_angle = 0.0; // vartheta
    double elevation = 0.0;   // theta, also the AoA at the receiver
    double slant_range = 0.0; // d
    double rotation = 0.0;    // eta
    double aod = 0.0;         // Theta = theta - eta - pi/2
};

struct SwarmGeometry
{
    OrbitConfig orbit;
    std::vector<SatelliteState> satellites; // ascending polar angle
    double inter_sat_distance = 0.0;        // DS (chord)
    double polar_spacing = 0.0;             // delta vartheta

    std::size_t size() const { return satellites.size(); }
    std::vector<double> elevations() const;
    std::vector<double> aods() const;
    // True when two satellites share an elevation (DS == 0 with NS > 1).
    bool degenerate() const;
};

double polar_from_elevation(double theta, const OrbitConfig &orbit);

double slant_range(double vartheta, const OrbitConfig &orbit);

/// Inverse of polar_from_elevation. Closed form via atan2 of the receiver-
/// relative position; throws InvalidConfig for satellites below the horizon.
double elevation_from_polar(double vartheta, const OrbitConfig &orbit);

/// Angular separation, seen from the Earth centre, of two satellites on the
/// orbit whose chord is DS. Equal to arccos(1 - DS^2 / (2 r0^2)), evaluated
/// as 2 asin(DS / (2 r0)) to keep precision for short chords.
double polar_spacing(double ds, const OrbitConfig &orbit);

/// Polar angle at which a satellite crosses the receiver's horizon on the
/// rising side; the setting side is at pi minus this value.
double horizon_polar_angle(const OrbitConfig &orbit);

/// Fully populated state for a satellite at the given polar angle. Throws
/// InvalidConfig if it is below the horizon or if the pointing policy leaves
/// the AoD outside [-pi/2, pi/2].
SatelliteState make_satellite(double vartheta, const OrbitConfig &orbit,
                              const PointingPolicy &pointing = {});

/// Places NS satellites spaced by DS along the orbit such that the mean of
/// their elevations equals theta_mean. The swarm centre is found by
/// bisection (1e-9 rad, at most 200 iterations).
SwarmGeometry place_swarm(double theta_mean, double ds, int num_satellites,
                          const OrbitConfig &orbit, const PointingPolicy &pointing = {});

} // namespace satswarm

#endif
