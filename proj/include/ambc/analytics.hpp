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

#ifndef AMBC_ANALYTICS_HPP
#define AMBC_ANALYTICS_HPP

#include <utility>
#include <vector>

#include "ambc/detector.hpp"
#include "ambc/geometry.hpp"
#include "ambc/signal.hpp"
#include "ambc/special_functions.hpp"
#include "ambc/types.hpp"

namespace ambc
{
    // Law of the optimum-receiver ratio statistic zeta = t / r under a
    // constant-modulus ambient signal: t and r are independent, each
    // |CN(m_i, 1)|^2, i.e. Poisson(mu_i) mixtures of Gamma(k + 1, 1) with
    //   mu1 = |s|^2 |u1^H g(x)|^2,  mu2 = |s|^2 |u2^H g(x)|^2.
    // These Poisson weights are half the textbook noncentralities
    // theta_{t,r} = 2 |s|^2 |u^H g|^2 (unit-variance complex components); the
    // convention is pinned by the Monte-Carlo oracle in the test suite.
    struct DncfParams
    {
        double mu1 = 0.0;
        double mu2 = 0.0;
    };

    DncfParams dncf_params(const MEigen &me, const CVec &g, double s_abs2);

    // Doubly noncentral F CDF as the double Poisson series of regularized
    // incomplete beta terms, each axis truncated at upper-tail mass < tol/2
    // (per-axis cap 20000 terms; overflowing the budget throws
    // SeriesBudgetExceeded so callers can fall back to Monte-Carlo).
    Probability dncf_cdf(double zeta, const DncfParams &params, double tol = 1e-10);

    // P_e = [F(1 | x0) + 1 - F(1 | x1)] / 2 for a constant-modulus ambient
    // signal of power s_abs2.
    Probability optimum_pe_constant(const CompositeChannel &cc, const MEigen &me,
                                    double s_abs2, double tol = 1e-10);

    // Asymmetric Laplace law of z = y^H M y under a Gaussian ambient signal.
    // lambda1 < 0 < lambda2 are the nonzero eigenvalues of
    // H|x = R_{y|x}^{1/2} M R_{y|x}^{1/2}.
    struct AlParams
    {
        double lambda1 = 0.0;
        double lambda2 = 0.0;
    };

    // Closed-form pairs for x0 and x1; each is cross-checked against a dense
    // eigensolver of the explicitly built H|x to 1e-8 relative and throws on
    // disagreement.
    std::pair<AlParams, AlParams> al_params(const CompositeChannel &cc, double sigma_s2);

    Probability al_cdf(double zeta, const AlParams &params);

    // Inverse of al_cdf (p in (0, 1)).
    double al_quantile(double p, const AlParams &params);

    // P_e = [F(0 | x0) + 1 - F(0 | x1)] / 2; both terms are closed-form CDF
    // values of the Asymmetric Laplace law.
    Probability optimum_pe_gaussian(const AlParams &params_x0, const AlParams &params_x1);

    // Simplified-receiver noncentrality
    //   theta = |s|^2 (|g1|^2 - |g1^H g0|^2 / |g0|^2)
    //         = |s|^2 |x0 - x1|^2 (|a|^2 |b|^2 - |a^H b|^2) / |a + x0 b|^2.
    double noncentrality_theta(const ChannelPair &channels, const BdAlphabet &alphabet,
                               double s_abs2);

    // Simplified receiver under Neyman-Pearson: z_s ~ Gamma(n_r - 1, 1) under
    // H0 and a Poisson(theta) mixture of Gamma(n_r - 1 + k, 1) under H1.
    Probability simplified_pf(double v_t, int n_r);
    double threshold_for_pf(double pf, int n_r);
    Probability simplified_pd(double theta, int n_r, double pf);
    Probability simplified_pe(double pf, double pd);

    struct SimplifiedLaw
    {
        int dof = 0;        // 2 (n_r - 1)
        double theta = 0.0;
        double v_t = 0.0;
    };
    SimplifiedLaw simplified_law(int n_r, double theta, double pf_target);

    // Rectangular BD-position scan of theta in dB at fixed gamma and array.
    struct ThetaMapGrid
    {
        double x_min = 0.0, x_max = 0.0;
        double y_min = 0.0, y_max = 0.0;
        int nx = 0, ny = 0;
    };
    struct ThetaMapResult
    {
        int nx = 0, ny = 0;
        std::vector<double> x, y, theta_db; // row-major, NaN marks singular points
    };
    ThetaMapResult theta_map(const ArrayGeometry &geometry, const BdAlphabet &alphabet,
                             double gamma_db, const ThetaMapGrid &grid);
}

#endif
