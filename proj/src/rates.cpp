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

#include "satswarm/rates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace satswarm
{

namespace
{

// Eigenvalues of H H^H that can be non-zero, from the smaller Gram matrix.
std::vector<double> gram_eigenvalues(const ComplexMatrix &H)
{
    const ComplexMatrix gram = H.rows() <= H.cols() ? ComplexMatrix(H * H.adjoint())
                                                    : ComplexMatrix(H.adjoint() * H);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        fail(ErrorCode::NumericalError, "eigendecomposition failed");
    std::vector<double> out(static_cast<std::size_t>(gram.rows()));
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
        out[static_cast<std::size_t>(i)] = std::max(0.0, eig.eigenvalues()(i));
    return out;
}

} // namespace

double capacity_eigen_form(const ComplexMatrix &H, double total_power, double noise_power)
{
    const std::vector<double> lambda = gram_eigenvalues(H);
    const PowerAllocation alloc = waterfilling(lambda, total_power, noise_power);
    double rate = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (alloc.powers[i] > 0.0)
            rate += std::log2(1.0 + lambda[i] * alloc.powers[i] / noise_power);
    return rate;
}

double capacity(const ComplexMatrix &H, double total_power, double noise_power)
{
    const Precoder G = svd_precoder(H, total_power, noise_power);
    const double det_form = rate_ideal_rx(H, G, noise_power);
    const double eig_form = capacity_eigen_form(H, total_power, noise_power);
    if (std::abs(det_form - eig_form) > 1e-9 * std::max(std::abs(eig_form), 1e-3))
    {
        std::ostringstream msg;
        msg.precision(17);
        msg << "capacity: determinant form " << det_form << " and eigenvalue form " << eig_form
            << " disagree";
        fail(ErrorCode::NumericalError, msg.str());
    }
    return det_form;
}

double rate_ideal_rx(const ComplexMatrix &H, const Precoder &precoder, double noise_power)
{
    if (!(noise_power > 0.0))
        fail(ErrorCode::InvalidInput, "rate_ideal_rx: noise power must be positive");
    if (H.cols() != precoder.matrix.rows())
        fail(ErrorCode::InvalidInput, "rate_ideal_rx: channel and precoder dimensions do not conform");
    const ComplexMatrix F = H * precoder.matrix;
    // Sylvester: |I_Nr + F F^H / s| = |I_M + F^H F / s|; take the smaller side.
    if (F.cols() <= F.rows())
        return log2det_identity_plus(F.adjoint() * F / noise_power);
    return log2det_identity_plus(F * F.adjoint() / noise_power);
}

std::vector<double> sinr_per_stream(const Equalizer &W, const std::vector<ComplexMatrix> &blocks,
                                    const Precoder &precoder, double noise_power)
{
    const ComplexMatrix F = effective_channel(blocks, precoder);
    if (W.matrix.rows() != F.cols() || W.matrix.cols() != F.rows())
        fail(ErrorCode::InvalidInput, "sinr_per_stream: equalizer dimensions do not conform");

    const ComplexMatrix WF = W.matrix * F; // (l, i) = w_l^H H_i g_i
    std::vector<double> out(static_cast<std::size_t>(F.cols()));
    for (Eigen::Index l = 0; l < F.cols(); ++l)
    {
        const double signal = std::norm(WF(l, l));
        double interference = 0.0;
        for (Eigen::Index i = 0; i < F.cols(); ++i)
            if (i != l)
                interference += std::norm(WF(l, i));
        const double denom = interference + noise_power * W.matrix.row(l).squaredNorm();
        out[static_cast<std::size_t>(l)] = denom > 0.0 ? signal / denom : 0.0;
    }
    return out;
}

std::vector<double> sinr_quadratic_form(const Equalizer &W, const std::vector<ComplexMatrix> &blocks,
                                        const Precoder &precoder, double noise_power)
{
    const ComplexMatrix F = effective_channel(blocks, precoder);
    if (W.matrix.rows() != F.cols() || W.matrix.cols() != F.rows())
        fail(ErrorCode::InvalidInput, "sinr_quadratic_form: equalizer dimensions do not conform");

    std::vector<double> out(static_cast<std::size_t>(F.cols()));
    for (Eigen::Index l = 0; l < F.cols(); ++l)
    {
        const ComplexVector w = W.matrix.row(l).adjoint();
        ComplexMatrix Q = ComplexMatrix::Identity(F.rows(), F.rows()) * noise_power;
        for (Eigen::Index i = 0; i < F.cols(); ++i)
            if (i != l)
                Q.noalias() += F.col(i) * F.col(i).adjoint();
        const ComplexMatrix S = F.col(l) * F.col(l).adjoint();
        const double num = (w.adjoint() * S * w)(0, 0).real();
        const double den = (w.adjoint() * Q * w)(0, 0).real();
        out[static_cast<std::size_t>(l)] = den > 0.0 ? num / den : 0.0;
    }
    return out;
}

double rate_linear(std::span<const double> sinrs)
{
    double rate = 0.0;
    for (double g : sinrs)
    {
        if (!(g >= 0.0))
            fail(ErrorCode::InvalidInput, "rate_linear: SINR must be non-negative");
        rate += std::log2(1.0 + g);
    }
    return rate;
}

double rate_upper_geo(const ComplexMatrix &A, double sigma_bar_sq)
{
    if (!(sigma_bar_sq > 0.0))
        fail(ErrorCode::InvalidInput, "rate_upper_geo: normalized noise must be positive");
    return log2det_identity_plus(A.adjoint() * A / sigma_bar_sq);
}

double rate_upper_geo_eigen_form(const ComplexMatrix &A, double sigma_bar_sq)
{
    if (!(sigma_bar_sq > 0.0))
        fail(ErrorCode::InvalidInput, "rate_upper_geo: normalized noise must be positive");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(A.adjoint() * A, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        fail(ErrorCode::NumericalError, "rate_upper_geo: eigendecomposition failed");
    double rate = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
        rate += std::log2(1.0 + std::max(0.0, eig.eigenvalues()(i)) / sigma_bar_sq);
    return rate;
}

} // namespace satswarm
