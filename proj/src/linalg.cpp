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

#include "satswarm/linalg.hpp"

#include <cmath>
#include <numbers>

#include "satswarm/common.hpp"

namespace satswarm
{

double log2det_identity_plus(const ComplexMatrix &S)
{
    if (S.rows() != S.cols())
        fail(ErrorCode::InvalidInput, "log2det_identity_plus: matrix is not square");
    if (S.rows() == 0)
        return 0.0;

    ComplexMatrix M = S;
    M.diagonal().array() += 1.0;
    Eigen::LLT<ComplexMatrix> llt(M);
    if (llt.info() != Eigen::Success)
        fail(ErrorCode::NumericalError, "log2det_identity_plus: Cholesky factorization failed");

    const auto &L = llt.matrixLLT();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i)
        acc += std::log(L(i, i).real());
    return 2.0 * acc / std::numbers::ln2;
}

ComplexMatrix hermitian_solve(const ComplexMatrix &A, const ComplexMatrix &B)
{
    Eigen::LLT<ComplexMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        fail(ErrorCode::NumericalError, "hermitian_solve: matrix is not positive definite");
    return llt.solve(B);
}

RealVector singular_values(const ComplexMatrix &M)
{
    Eigen::BDCSVD<ComplexMatrix> svd(M);
    return svd.singularValues();
}

int numerical_rank(const ComplexMatrix &M, double rel_tol)
{
    const RealVector s = singular_values(M);
    if (s.size() == 0 || s(0) == 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0))
            ++rank;
    return rank;
}

ComplexMatrix hconcat(const std::vector<ComplexMatrix> &blocks)
{
    if (blocks.empty())
        return {};
    const Eigen::Index rows = blocks.front().rows();
    Eigen::Index cols = 0;
    for (const auto &b : blocks)
    {
        if (b.rows() != rows)
            fail(ErrorCode::InvalidInput, "hconcat: row count mismatch");
        cols += b.cols();
    }
    ComplexMatrix out(rows, cols);
    Eigen::Index c = 0;
    for (const auto &b : blocks)
    {
        out.middleCols(c, b.cols()) = b;
        c += b.cols();
    }
    return out;
}

} // namespace satswarm
