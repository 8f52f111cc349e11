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

#ifndef SATSWARM_RATES_HPP
#define SATSWARM_RATES_HPP

#include <span>
#include <vector>

#include "satswarm/equalization.hpp"
#include "satswarm/linalg.hpp"
#include "satswarm/precoding.hpp"

namespace satswarm
{

// Rates in bit/s/Hz.
struct RateMetrics
{
    double r_opt = 0.0;        // capacity, SVD precoder + waterfilling
    double r_per = 0.0;        // geometric precoder, ideal receiver
    double r_lin_geo = 0.0;    // geometric precoder, geometric equalizer
    double r_lin_opt_eq = 0.0; // geometric precoder, SINR-optimal linear equalizer
    double r_upper = 0.0;      // geometric-model upper bound
};

struct RateReport : RateMetrics
{
    std::vector<double> sinr_geo;    // per stream, geometric equalizer
    std::vector<double> sinr_opt_eq; // per stream, optimal equalizer
};

/// Capacity under a sum-power constraint. Evaluates both the log-determinant
/// with the SVD precoder and the waterfilled eigenvalue sum, and throws
/// NumericalError if they disagree by more than 1e-9 relative.
double capacity(const ComplexMatrix &H, double total_power, double noise_power);

/// Waterfilled eigenvalue-sum form of the capacity on its own.
double capacity_eigen_form(const ComplexMatrix &H, double total_power, double noise_power);

/// log2 |I + H G G^H H^H / noise| for a fixed precoder (ideal receiver).
double rate_ideal_rx(const ComplexMatrix &H, const Precoder &precoder, double noise_power);

/// Per-stream SINR of a linear receiver, as a ratio of squared inner products.
std::vector<double> sinr_per_stream(const Equalizer &W, const std::vector<ComplexMatrix> &blocks,
                                    const Precoder &precoder, double noise_power);

/// The same SINRs written as generalized Rayleigh quotients
/// w^H f f^H w / w^H (sum_{i != l} f_i f_i^H + noise I) w.
std::vector<double> sinr_quadratic_form(const Equalizer &W, const std::vector<ComplexMatrix> &blocks,
                                        const Precoder &precoder, double noise_power);

double rate_linear(std::span<const double> sinrs);

/// log2 |I_NS + A^H A / sigma_bar^2|, the bound evaluated on the geometric
/// model. Equal to log2 |I_Nr + A A^H / sigma_bar^2|.
double rate_upper_geo(const ComplexMatrix &A, double sigma_bar_sq);

/// The same bound from the eigenvalues of A^H A.
double rate_upper_geo_eigen_form(const ComplexMatrix &A, double sigma_bar_sq);

} // namespace satswarm

#endif
