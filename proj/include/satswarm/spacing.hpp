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

#ifndef SATSWARM_SPACING_HPP
#define SATSWARM_SPACING_HPP

#include "satswarm/geometry.hpp"
#include "satswarm/linalg.hpp"

namespace satswarm
{

struct SpacingQuery
{
    double elevation = kPi / 2; // theta of the leading satellite
    int rx = 100;               // Nr
    OrbitConfig orbit;
    int harmonic = 1;           // k, with k mod Nr != 0

    void validate() const;
};

struct SpacingResult
{
    double ds_orth = 0.0;
    double delta_phi_achieved = 0.0;
    int iterations = 0;
};

struct RelaxedCheck
{
    bool satisfied = true;
    double min_delta_phi = 0.0; // +inf for a single satellite
};

/// cos(theta_lead) - cos(theta_trail), where the trailing satellite sits
/// delta vartheta further along in polar angle. Throws InvalidConfig if the
/// trailing satellite is below the horizon.
double delta_phi(double theta_lead, double ds, const OrbitConfig &orbit);

/// Largest DS the delta_phi search may use: the smaller of ds_cap and the
/// chord at which the trailing satellite reaches the horizon.
double max_spacing(double theta_lead, const OrbitConfig &orbit, double ds_cap = 500e3);

/// Smallest DS with delta_phi = 2k / Nr, by bracketed bisection on (0, 500 km].
/// Throws NoRoot if the bracket does not contain a solution.
SpacingResult optimal_spacing(const SpacingQuery &query);

/// Minimum delta_phi over neighbouring satellites compared with 2 / Nr.
RelaxedCheck relaxed_check(const SwarmGeometry &swarm, int rx);

/// || A^H A / Nr - I ||_F / || I ||_F, zero for an orthogonal steering set.
double orthogonality_defect(const ComplexMatrix &A);

} // namespace satswarm

#endif
