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

#ifndef SATSWARM_EQUALIZATION_HPP
#define SATSWARM_EQUALIZATION_HPP

#include <vector>

#include "satswarm/linalg.hpp"
#include "satswarm/precoding.hpp"

namespace satswarm
{

enum class EqualizerKind
{
    OptimalLinear,
    Geometric,
};

struct Equalizer
{
    ComplexMatrix matrix; // NS x Nr, row l is w_l^H
    EqualizerKind kind = EqualizerKind::OptimalLinear;
    double normalized_noise = 0.0; // sigma_bar^2, geometric kind only
};

/// Effective per-stream channels H G (Nr x M) for stacked blocks.
ComplexMatrix effective_channel(const std::vector<ComplexMatrix> &blocks, const Precoder &precoder);

/// SINR-maximising linear receiver for a fixed precoder:
/// w_l^H = f_l^H (sum_i f_i f_i^H + noise I)^-1 with f_i = H_i g_i.
Equalizer optimal_equalizer(const std::vector<ComplexMatrix> &blocks, const Precoder &precoder,
                            double noise_power);

/// Geometry-based receiver W = A^H (A A^H + sigma_bar^2 I)^-1. Needs only the
/// AoAs and the normalized noise level.
Equalizer geometric_equalizer(const ComplexMatrix &A, double sigma_bar_sq);

/// The same matrix assembled from the rank-one sum of a_i a_i^H instead of
/// the Gram product. Kept for cross-checking the two forms.
Equalizer geometric_equalizer_rank_one_sum(const ComplexMatrix &A, double sigma_bar_sq);

/// sigma_bar^2 = noise / (sigma_alpha^2 Nt rho).
double normalized_noise(double noise_power, double sigma_alpha_sq, int tx_per_satellite, double per_sat_power);

} // namespace satswarm

#endif
