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

#ifndef SATSWARM_CHANNEL_HPP
#define SATSWARM_CHANNEL_HPP

#include <array>
#include <optional>
#include <vector>

#include "satswarm/geometry.hpp"
#include "satswarm/linalg.hpp"
#include "satswarm/random.hpp"

namespace satswarm
{

struct ArrayConfig
{
    int tx_per_satellite = 20; // Nt
    int rx = 100;              // Nr
    double carrier_frequency = 20e9;

    double antenna_spacing() const { return kSpeedOfLight / (2.0 * carrier_frequency); }
    double wavenumber() const { return 2.0 * kPi * carrier_frequency / kSpeedOfLight; }
    void validate() const;
};

// Link budget surrogates. Shadow fading uses a piecewise-constant sigma table
// over elevation-above-horizon bins centred on 10, 20, ..., 90 degrees (bin k
// covers [10k - 5, 10k + 5) degrees, the last one closes at 90). Elevations
// below 5 degrees are outside the table.
struct LossConfig
{
    double tx_gain_db = 17.8;
    double rx_gain_db = 20.0;

    bool shadow_fading = true;
    std::array<double, 9> shadow_sigma_db = {1.79, 1.14, 1.14, 0.92, 1.42, 1.56, 0.85, 0.72, 0.72};

    bool gas = true;
    double gas_zenith_db = 0.5; // scaled by 1/sin(elevation)

    bool scintillation = true;
    double scintillation_sigma_db = 0.1; // zenith sigma, scaled by sin(elevation)^-1.2

    double clutter_db = 0.0; // zero under line of sight
    bool random_phase = true;

    // Replaces the geometry-derived sigma_alpha^2 for the geometric equalizer.
    std::optional<double> sigma_alpha_sq;

    void validate() const;
};

struct LinkBudget
{
    double fspl_db = 0.0;
    double tx_gain_db = 0.0;
    double rx_gain_db = 0.0;
    double shadow_fading_db = 0.0;
    double clutter_db = 0.0;
    double gas_db = 0.0;
    double scintillation_db = 0.0;
    double atmospheric_phase = 0.0; // uniform on [0, 2 pi)

    double total_db() const
    {
        return fspl_db - (tx_gain_db + rx_gain_db) + shadow_fading_db + clutter_db + gas_db +
               scintillation_db;
    }
    // Loss without the random terms, used for sigma_alpha^2.
    double deterministic_db() const { return fspl_db - (tx_gain_db + rx_gain_db) + clutter_db + gas_db; }
};

struct ChannelSet
{
    std::vector<ComplexMatrix> true_blocks;   // H_l, Nr x Nt
    std::vector<ComplexMatrix> approx_blocks; // alpha_l a_l b_l^H
    ComplexMatrix stacked_true;               // [H_1 ... H_NS]
    ComplexMatrix rx_steering;                // A = [a_1 ... a_NS]
    std::vector<ComplexVector> tx_steering;   // b_l
    std::vector<Complex> alpha;
    std::vector<LinkBudget> budgets;
    double sigma_alpha_sq = 0.0;
};

/// a(theta), entry m = exp(j pi m cos theta).
ComplexVector rx_steering(double theta, int num_rx);

/// b(Theta), entry n = exp(-j pi n sin Theta).
ComplexVector tx_steering(double aod, int num_tx);

/// Rank-one geometric channel alpha a b^H.
ComplexMatrix approx_channel(Complex alpha, const ComplexVector &a, const ComplexVector &b);

/// Shadow-fading sigma for a given elevation theta in [0, pi].
double shadow_sigma_db(double theta, const LossConfig &cfg);

/// Draws one link budget. The stream is always advanced by exactly three
/// draws (shadow fading, scintillation, phase), whatever is enabled.
LinkBudget link_budget(const SatelliteState &sat, const ArrayConfig &arrays, const LossConfig &cfg,
                       RandomStream &rng);

/// Line-of-sight channel from exact antenna coordinates. Transmit antenna n
/// sits at p_sat + n DA (cos eta, sin eta), receive antenna m at
/// p_rx + m DA (1, 0). Entry (m, n) has magnitude 10^(-L_mn / 20) with the
/// path loss adjusted for the per-pair distance, and phase
/// -(nu d_mn + phi_atm).
ComplexMatrix true_channel(const SatelliteState &sat, const OrbitConfig &orbit,
                           const ArrayConfig &arrays, const LinkBudget &budget);

/// Complex gain of the (0, 0) antenna pair.
Complex reference_gain(const SatelliteState &sat, const ArrayConfig &arrays, const LinkBudget &budget);

ChannelSet channel_set(const SwarmGeometry &swarm, const ArrayConfig &arrays, const LossConfig &cfg,
                       RandomStream &rng);

} // namespace satswarm

#endif
