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

#ifndef SATSWARM_PRECODING_HPP
#define SATSWARM_PRECODING_HPP

#include <span>
#include <vector>

#include "satswarm/channel.hpp"
#include "satswarm/geometry.hpp"
#include "satswarm/linalg.hpp"

namespace satswarm
{

struct PowerAllocation
{
    std::vector<double> powers; // aligned with the input eigenvalues
    double water_level = 0.0;
    double total_budget = 0.0;

    int active() const;
};

enum class PrecoderKind
{
    SvdOptimal,
    GeometricDistributed,
};

struct Precoder
{
    ComplexMatrix matrix; // N_Tx x M
    PrecoderKind kind = PrecoderKind::SvdOptimal;
    std::vector<double> per_sat_budgets;

    int streams() const { return static_cast<int>(matrix.cols()); }
};

/// Waterfilling over parallel channels with gains lambda: p = max(0, mu - noise / lambda),
/// sum p = total_power. Exact active-set search over the eigenvalues sorted in
/// descending order. Throws InvalidInput if no eigenvalue is positive.
PowerAllocation waterfilling(std::span<const double> eigenvalues, double total_power, double noise_power);

/// Sum-power capacity-achieving precoder V P^(1/2). Only beams that receive
/// power are kept, so M equals the number of active waterfilling beams.
Precoder svd_precoder(const ComplexMatrix &H, double total_power, double noise_power);

/// Distributed geometric precoder: block l is sqrt(rho_l / Nt) b_l, placed in
/// column l. Needs only each satellite's own AoD.
Precoder geometric_precoder(const SwarmGeometry &swarm, const ArrayConfig &arrays,
                            std::span<const double> per_sat_power);

/// Same with equal per-satellite power rho.
Precoder geometric_precoder(const SwarmGeometry &swarm, const ArrayConfig &arrays, double per_sat_power);

} // namespace satswarm

#endif
