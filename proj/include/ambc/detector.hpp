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

#ifndef AMBC_DETECTOR_HPP
#define AMBC_DETECTOR_HPP

#include "ambc/geometry.hpp"
#include "ambc/signal.hpp"
#include "ambc/types.hpp"

namespace ambc
{
    // Compound channels g(x) = alpha + x beta under the two BD symbols.
    struct CompositeChannel
    {
        CVec g0;
        CVec g1;
    };

    // Orthogonal projector G = I - g g^H / |g|^2: idempotent, rank n_r - 1,
    // annihilates g. It is both the beamformer and the covariance of the
    // residual noise after ML ambient-signal substitution.
    struct Projector
    {
        CMat matrix;
    };

    // Closed-form eigensystem of M = g0 g0^H/|g0|^2 - g1 g1^H/|g1|^2:
    // rank-2 indefinite, nonzero eigenvalues +-kappa with
    //   kappa = sqrt(1 - |g0^H g1|^2 / (|g0|^2 |g1|^2)).
    struct MEigen
    {
        double kappa = 0.0;
        CVec u1; // unit eigenvector for +kappa
        CVec u2; // unit eigenvector for -kappa
    };

    // z = kappa (t - r) with t = |u1^H y|^2, r = |u2^H y|^2; zeta = t / r is
    // the ratio statistic (+inf sentinel when r = 0).
    struct ZStat
    {
        double z = 0.0;
        double zeta = 0.0;
    };

    enum class Hypothesis
    {
        H0, // BD sent x0
        H1  // BD sent x1
    };

    CompositeChannel composite_channel(const ChannelPair &channels, const BdAlphabet &alphabet);

    Projector projector(const CVec &g);

    // Throws InseparableHypotheses when g0 and g1 are (numerically) parallel;
    // kappa^2 below 1e-14 is treated as zero.
    MEigen m_eigen(const CompositeChannel &cc);

    // The decision matrix M itself (analysis and validation use it directly).
    CMat decision_matrix(const CompositeChannel &cc);

    // ln f(y | x, s = s_ML) = -y^H G(x) y - n_r ln(pi).
    double log_likelihood(const CVec &y, const Projector &beamformer);

    ZStat test_statistic_z(const CVec &y, const MEigen &me);

    // x0 when z >= 0, x1 when z < 0 (deterministic tie-break at the
    // measure-zero boundary).
    cplx optimum_decide(const CVec &y, const MEigen &me, const BdAlphabet &alphabet);

    // Energy behind the x0 beamformer: z_s = y^H G(x0) y >= 0.
    double simplified_statistic(const CVec &y, const Projector &g0_beamformer);

    // H1 iff z_s > v_t (strict).
    Hypothesis simplified_decide(double z_s, double v_t);

    // s_ML = g^H y / |g|^2; estimation-error variance 1 / |g|^2.
    cplx ml_ambient_estimate(const CVec &y, const CVec &g);
}

#endif
