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

#include "satswarm/equalization.hpp"

namespace satswarm
{

ComplexMatrix effective_channel(const std::vector<ComplexMatrix> &blocks, const Precoder &precoder)
{
    const ComplexMatrix H = hconcat(blocks);
    if (H.cols() != precoder.matrix.rows())
        fail(ErrorCode::InvalidInput, "effective_channel: channel and precoder dimensions do not conform");
    return H * precoder.matrix;
}

Equalizer optimal_equalizer(const std::vector<ComplexMatrix> &blocks, const Precoder &precoder,
                            double noise_power)
{
    if (!(noise_power > 0.0))
        fail(ErrorCode::InvalidInput, "optimal_equalizer: noise power must be positive");
    const ComplexMatrix F = effective_channel(blocks, precoder);

    ComplexMatrix R = F * F.adjoint();
    R.diagonal().array() += noise_power;

    Equalizer W;
    W.kind = EqualizerKind::OptimalLinear;
    W.matrix = hermitian_solve(R, F).adjoint();
    return W;
}

Equalizer geometric_equalizer(const ComplexMatrix &A, double sigma_bar_sq)
{
    if (!(sigma_bar_sq > 0.0))
        fail(ErrorCode::InvalidInput, "geometric_equalizer: normalized noise must be positive");

    ComplexMatrix R = A * A.adjoint();
    R.diagonal().array() += sigma_bar_sq;

    Equalizer W;
    W.kind = EqualizerKind::Geometric;
    W.normalized_noise = sigma_bar_sq;
    W.matrix = hermitian_solve(R, A).adjoint();
    return W;
}

Equalizer geometric_equalizer_rank_one_sum(const ComplexMatrix &A, double sigma_bar_sq)
{
    if (!(sigma_bar_sq > 0.0))
        fail(ErrorCode::InvalidInput, "geometric_equalizer: normalized noise must be positive");

    ComplexMatrix R = ComplexMatrix::Identity(A.rows(), A.rows()) * sigma_bar_sq;
    for (Eigen::Index i = 0; i < A.cols(); ++i)
        R.noalias() += A.col(i) * A.col(i).adjoint();

    Equalizer W;
    W.kind = EqualizerKind::Geometric;
    W.normalized_noise = sigma_bar_sq;
    W.matrix = hermitian_solve(R, A).adjoint();
    return W;
}

double normalized_noise(double noise_power, double sigma_alpha_sq, int tx_per_satellite, double per_sat_power)
{
    const double denom = sigma_alpha_sq * tx_per_satellite * per_sat_power;
    if (!(denom > 0.0))
        fail(ErrorCode::InvalidInput, "normalized_noise: signal power must be positive");
    return noise_power / denom;
}

} // namespace satswarm
