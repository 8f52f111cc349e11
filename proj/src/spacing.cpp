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

#include "satswarm/spacing.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace satswarm
{

void SpacingQuery::validate() const
{
    orbit.validate();
    if (rx < 1)
        fail(ErrorCode::InvalidInput, "spacing query: need at least one receive antenna");
    if (harmonic < 1 || harmonic % rx == 0)
        fail(ErrorCode::InvalidInput, "spacing query: k must be positive and not a multiple of Nr");
    if (!(elevation >= 0.0 && elevation <= kPi))
        fail(ErrorCode::InvalidInput, "spacing query: elevation must lie in [0, pi]");
}

double delta_phi(double theta_lead, double ds, const OrbitConfig &orbit)
{
    const double lead = polar_from_elevation(theta_lead, orbit);
    const double trail = lead + polar_spacing(ds, orbit);
    elevation_from_polar(trail, orbit); // horizon check
    const double r0 = orbit.orbital_radius();
    auto cos_elevation = [&](double v) { return r0 * std::cos(v) / slant_range(v, orbit); };
    return cos_elevation(lead) - cos_elevation(trail);
}

double max_spacing(double theta_lead, const OrbitConfig &orbit, double ds_cap)
{
    const double room = kPi - horizon_polar_angle(orbit) - polar_from_elevation(theta_lead, orbit);
    if (room <= 0.0)
        return 0.0;
    return std::min(ds_cap, 2.0 * orbit.orbital_radius() * std::sin(0.5 * room));
}

SpacingResult optimal_spacing(const SpacingQuery &query)
{
    query.validate();
    const double target = 2.0 * query.harmonic / query.rx;
    const double theta = query.elevation;
    const OrbitConfig &orbit = query.orbit;

    auto no_root = [&]
    {
        std::ostringstream msg;
        msg << "no inter-satellite distance up to 500 km reaches delta_phi = " << target << " at elevation "
            << rad_to_deg(theta) << " deg";
        fail(ErrorCode::NoRoot, msg.str());
    };

    // Stay a hair inside the horizon so the endpoint itself is evaluable.
    const double hi_limit = max_spacing(theta, orbit) * (1.0 - 1e-12);
    if (!(hi_limit > 0.0))
        no_root();

    constexpr int kSamples = 64;
    double previous = 0.0;
    for (int i = 1; i <= kSamples; ++i)
    {
        const double value = delta_phi(theta, hi_limit * i / kSamples, orbit);
        if (!(value > previous))
            fail(ErrorCode::NumericalError, "delta_phi is not increasing in DS; bisection is not applicable");
        previous = value;
    }
    if (previous < target)
        no_root();

    constexpr int kMaxIterations = 100;
    double lo = 0.0;
    double hi = hi_limit;
    SpacingResult result;
    result.ds_orth = hi;
    result.delta_phi_achieved = previous;
    for (int it = 1; it <= kMaxIterations; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        const double value = delta_phi(theta, mid, orbit);
        result.iterations = it;
        if (std::abs(value - target) < std::abs(result.delta_phi_achieved - target))
        {
            result.ds_orth = mid;
            result.delta_phi_achieved = value;
        }
        if (std::abs(value - target) < 1e-14 || mid == lo || mid == hi)
            break;
        (value < target ? lo : hi) = mid;
    }
    if (!(std::abs(result.delta_phi_achieved - target) < 1e-12))
        fail(ErrorCode::NoConvergence, "optimal_spacing: bisection did not reach the target");
    return result;
}

RelaxedCheck relaxed_check(const SwarmGeometry &swarm, int rx)
{
    if (rx < 1)
        fail(ErrorCode::InvalidInput, "relaxed_check: need at least one receive antenna");
    RelaxedCheck out;
    out.min_delta_phi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < swarm.satellites.size(); ++i)
    {
        const double d = std::cos(swarm.satellites[i - 1].elevation) - std::cos(swarm.satellites[i].elevation);
        out.min_delta_phi = std::min(out.min_delta_phi, d);
    }
    // Allow rounding slack so a swarm built exactly at DS_orth passes.
    out.satisfied = out.min_delta_phi >= 2.0 / rx - 1e-12;
    return out;
}

double orthogonality_defect(const ComplexMatrix &A)
{
    if (A.cols() == 0 || A.rows() == 0)
        fail(ErrorCode::InvalidInput, "orthogonality_defect: empty steering matrix");
    ComplexMatrix G = A.adjoint() * A / static_cast<double>(A.rows());
    G.diagonal().array() -= 1.0;
    return G.norm() / std::sqrt(static_cast<double>(A.cols()));
}

} // namespace satswarm
