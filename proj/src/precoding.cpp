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

#include "satswarm/precoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace satswarm
{

int PowerAllocation::active() const
{
    return static_cast<int>(std::count_if(powers.begin(), powers.end(), [](double p) { return p > 0.0; }));
}

PowerAllocation waterfilling(std::span<const double> eigenvalues, double total_power, double noise_power)
{
    if (!(total_power > 0.0))
        fail(ErrorCode::InvalidInput, "waterfilling: total power must be positive");
    if (!(noise_power > 0.0))
        fail(ErrorCode::InvalidInput, "waterfilling: noise power must be positive");
    for (double v : eigenvalues)
        if (!(v >= 0.0) || !std::isfinite(v))
            fail(ErrorCode::InvalidInput, "waterfilling: eigenvalues must be finite and non-negative");

    std::vector<std::size_t> order(eigenvalues.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return eigenvalues[i] > eigenvalues[j]; });

    std::size_t candidates = 0;
    while (candidates < order.size() && eigenvalues[order[candidates]] > 0.0)
        ++candidates;
    if (candidates == 0)
        fail(ErrorCode::InvalidInput, "waterfilling: all eigenvalues are zero");

    // Largest active set whose weakest member still gets positive power. The
    // strongest channel alone is always feasible.
    double level = 0.0;
    std::size_t active = candidates;
    for (; active >= 1; --active)
    {
        double inverse_sum = 0.0;
        for (std::size_t i = 0; i < active; ++i)
            inverse_sum += noise_power / eigenvalues[order[i]];
        level = (total_power + inverse_sum) / static_cast<double>(active);
        if (level - noise_power / eigenvalues[order[active - 1]] > 0.0)
            break;
    }

    PowerAllocation out;
    out.powers.assign(eigenvalues.size(), 0.0);
    out.water_level = level;
    out.total_budget = total_power;
    for (std::size_t i = 0; i < active; ++i)
        out.powers[order[i]] = level - noise_power / eigenvalues[order[i]];
    return out;
}

Precoder svd_precoder(const ComplexMatrix &H, double total_power, double noise_power)
{
    if (H.size() == 0)
        fail(ErrorCode::InvalidInput, "svd_precoder: empty channel");

    Eigen::BDCSVD<ComplexMatrix> svd(H, Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        fail(ErrorCode::NumericalError, "svd_precoder: SVD failed");

    const RealVector &s = svd.singularValues();
    std::vector<double> lambda(static_cast<std::size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i)
    {
        if (!std::isfinite(s(i)))
            fail(ErrorCode::NumericalError, "svd_precoder: non-finite singular value");
        lambda[static_cast<std::size_t>(i)] = s(i) * s(i);
    }

    const PowerAllocation alloc = waterfilling(lambda, total_power, noise_power);
    const int beams = alloc.active();

    // Singular values come sorted, so the active beams are the leading columns.
    Precoder G;
    G.kind = PrecoderKind::SvdOptimal;
    G.per_sat_budgets = {total_power};
    G.matrix = svd.matrixV().leftCols(beams);
    for (int k = 0; k < beams; ++k)
        G.matrix.col(k) *= std::sqrt(alloc.powers[static_cast<std::size_t>(k)]);
    return G;
}

Precoder geometric_precoder(const SwarmGeometry &swarm, const ArrayConfig &arrays,
                            std::span<const double> per_sat_power)
{
    const auto ns = static_cast<Eigen::Index>(swarm.size());
    if (static_cast<Eigen::Index>(per_sat_power.size()) != ns)
        fail(ErrorCode::InvalidInput, "geometric_precoder: one power budget per satellite required");
    const int nt = arrays.tx_per_satellite;

    Precoder G;
    G.kind = PrecoderKind::GeometricDistributed;
    G.per_sat_budgets.assign(per_sat_power.begin(), per_sat_power.end());
    G.matrix = ComplexMatrix::Zero(ns * nt, ns);
    for (Eigen::Index l = 0; l < ns; ++l)
    {
        const double rho = per_sat_power[static_cast<std::size_t>(l)];
        if (!(rho >= 0.0))
            fail(ErrorCode::InvalidInput, "geometric_precoder: power budgets must be non-negative");
        G.matrix.block(l * nt, l, nt, 1) =
            std::sqrt(rho / nt) * tx_steering(swarm.satellites[static_cast<std::size_t>(l)].aod, nt);
    }
    return G;
}

Precoder geometric_precoder(const SwarmGeometry &swarm, const ArrayConfig &arrays, double per_sat_power)
{
    const std::vector<double> rho(swarm.size(), per_sat_power);
    return geometric_precoder(swarm, arrays, rho);
}

} // namespace satswarm
