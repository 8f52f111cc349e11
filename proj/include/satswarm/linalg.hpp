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

#ifndef SATSWARM_LINALG_HPP
#define SATSWARM_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace satswarm
{

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// log2 |I + S| for Hermitian positive semi-definite S, through a Cholesky
// factorization of I + S. Throws NumericalError if the factorization fails.
double log2det_identity_plus(const ComplexMatrix &S);

// Solves A X = B for Hermitian positive definite A (Cholesky, no inversion).
ComplexMatrix hermitian_solve(const ComplexMatrix &A, const ComplexMatrix &B);

// Singular values in descending order.
RealVector singular_values(const ComplexMatrix &M);

// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const ComplexMatrix &M, double rel_tol = 1e-9);

// Horizontal concatenation [M_0, M_1, ...]; all blocks must share a row count.
ComplexMatrix hconcat(const std::vector<ComplexMatrix> &blocks);

} // namespace satswarm

#endif
