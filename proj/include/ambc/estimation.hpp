// SPDX-License-Identifier: Apache-2.0
//
// ambc: optimum multi-antenna receiver library and Monte-Carlo simulator
// for binary-modulated ambient backscatter signals
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

#ifndef AMBC_ESTIMATION_HPP
#define AMBC_ESTIMATION_HPP

#include "ambc/types.hpp"

namespace ambc
{
    // Blind beamformer estimation from an n_r x L preamble sample matrix
    // Y_p = [y_1, ..., y_L], all columns received under a single BD symbol.

    enum class EstimatorMethod
    {
        InvCov,   // inverse sample covariance, used directly as quadratic form
        Svd,      // dominant left-singular vector of Y_p
        PowerIter // power iteration on Y_p Y_p^H
    };

    struct BeamformerEstimate
    {
        EstimatorMethod method = EstimatorMethod::Svd;
        CVec g_hat;   // unit-norm channel direction; empty for InvCov
        CMat g_matrix; // G_hat: I - g_hat g_hat^H, or R_p^{-1} for InvCov
    };

    // R_p = (1/L) sum_l y_l y_l^H (Hermitian PSD).
    CMat sample_covariance(const CMat &y_p);

    // G_hat = R_p^{-1}; approximates G(x0) when |s|^2 |g0|^2 is large.
    // Throws NotEnoughSamples when R_p is singular (generically L < n_r).
    BeamformerEstimate estimate_inv_cov(const CMat &y_p);

    // Throws SingularValueTie when the top two singular values coincide
    // within 1e-12 relative (never happens for generic noisy samples).
    BeamformerEstimate estimate_svd(const CMat &y_p);

    // v_{k+1} = A v_k / |A v_k| with A = Y_p Y_p^H, started from the first
    // preamble sample (nonzero dominant component with probability 1; an
    // exactly orthogonal start is a fixed point at the minor eigenvector).
    // Convergence is phase-aligned: min_phi |v_{k+1} - e^{j phi} v_k| < tol.
    BeamformerEstimate estimate_power_iteration(const CMat &y_p, double tol = 1e-8,
                                                int max_iter = 50);

    // |g_hat^H g| / (|g_hat| |g|) in [0, 1].
    double alignment(const CVec &g_hat, const CVec &g);
}

#endif
