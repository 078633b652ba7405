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

#include "ambc/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "ambc/errors.hpp"

namespace ambc
{
    namespace
    {
        constexpr long axis_term_cap = 20000;
        constexpr double total_term_cap = 2e7;

        // Poisson pmf on the index window that carries all but < ~1e-17 of the
        // mass, walked outward from the mode so nothing underflows.
        struct PoissonWindow
        {
            long k_lo = 0;
            std::vector<double> pmf;
        };

        PoissonWindow poisson_window(double mu)
        {
            PoissonWindow w;
            if (mu <= 0.0)
            {
                w.pmf = {1.0};
                return w;
            }
            const auto k0 = static_cast<long>(mu);
            const double p0 = std::exp(-mu + static_cast<double>(k0) * std::log(mu) -
                                       std::lgamma(static_cast<double>(k0) + 1.0));
            const double cutoff = p0 * 1e-18;

            long k_lo = k0;
            double p = p0;
            while (k_lo > 0 && p > cutoff)
            {
                p *= static_cast<double>(k_lo) / mu;
                --k_lo;
            }
            long k_hi = k0;
            p = p0;
            while (p > cutoff)
            {
                ++k_hi;
                p *= mu / static_cast<double>(k_hi);
                if (k_hi - k_lo >= axis_term_cap)
                    throw SeriesBudgetExceeded("dncf_cdf: Poisson axis needs more than " +
                                               std::to_string(axis_term_cap) +
                                               " terms (mu = " + std::to_string(mu) +
                                               "); use the Monte-Carlo oracle instead");
            }

            w.k_lo = k_lo;
            w.pmf.resize(static_cast<std::size_t>(k_hi - k_lo + 1));
            const auto idx0 = static_cast<std::size_t>(k0 - k_lo);
            w.pmf[idx0] = p0;
            p = p0;
            for (long k = k0; k > k_lo; --k)
            {
                p *= static_cast<double>(k) / mu;
                w.pmf[static_cast<std::size_t>(k - 1 - k_lo)] = p;
            }
            p = p0;
            for (long k = k0 + 1; k <= k_hi; ++k)
            {
                p *= mu / static_cast<double>(k);
                w.pmf[static_cast<std::size_t>(k - k_lo)] = p;
            }
            return w;
        }
    }

    DncfParams dncf_params(const MEigen &me, const CVec &g, double s_abs2)
    {
        if (s_abs2 < 0.0)
            throw std::invalid_argument("dncf_params: s_abs2 must be >= 0");
        DncfParams p;
        p.mu1 = s_abs2 * std::norm(me.u1.dot(g));
        p.mu2 = s_abs2 * std::norm(me.u2.dot(g));
        return p;
    }

    Probability dncf_cdf(double zeta, const DncfParams &params, double tol)
    {
        if (!(tol > 0.0))
            throw std::invalid_argument("dncf_cdf: tol must be positive");
        if (params.mu1 < 0.0 || params.mu2 < 0.0 || !std::isfinite(params.mu1) || !std::isfinite(params.mu2))
            throw std::invalid_argument("dncf_cdf: weights must be finite and >= 0");
        if (zeta < 0.0)
            throw std::invalid_argument("dncf_cdf: zeta must be >= 0");
        if (zeta == 0.0)
            return Probability(0.0);
        if (std::isinf(zeta))
            return Probability(1.0);

        // x = zeta/(1+zeta); keep ln x and ln(1-x) exact for extreme zeta.
        const double log_x = std::log(zeta) - std::log1p(zeta);
        const double log_1mx = -std::log1p(zeta);
        const double x = zeta / (1.0 + zeta);

        const PoissonWindow w1 = poisson_window(params.mu1);
        const PoissonWindow w2 = poisson_window(params.mu2);
        if (static_cast<double>(w1.pmf.size()) * static_cast<double>(w2.pmf.size()) > total_term_cap)
            throw SeriesBudgetExceeded("dncf_cdf: series needs more than 2e7 terms; use the Monte-Carlo oracle instead");

        const long j_lo = w2.k_lo;
        double total = 0.0;
        for (std::size_t ii = 0; ii < w1.pmf.size(); ++ii)
        {
            const double a = static_cast<double>(w1.k_lo + static_cast<long>(ii)) + 1.0;
            const double b0 = static_cast<double>(j_lo) + 1.0;
            // row head I_x(a, b0), then the upward recurrence
            //   I_x(a, b+1) = I_x(a, b) + x^a (1-x)^b / (b B(a, b))
            double ibeta_val = boost::math::ibeta(a, b0, x);
            double log_t = a * log_x + b0 * log_1mx - std::log(b0) - log_beta(a, b0);
            double row = w2.pmf[0] * ibeta_val;
            for (std::size_t jj = 1; jj < w2.pmf.size(); ++jj)
            {
                const double b = static_cast<double>(j_lo + static_cast<long>(jj)); // previous column's b
                ibeta_val += std::exp(log_t);
                log_t += log_1mx + std::log(a + b) - std::log(b + 1.0);
                row += w2.pmf[jj] * ibeta_val;
            }
            total += w1.pmf[ii] * row;
        }
        return Probability(total);
    }

    Probability optimum_pe_constant(const CompositeChannel &cc, const MEigen &me,
                                    double s_abs2, double tol)
    {
        const double f0 = dncf_cdf(1.0, dncf_params(me, cc.g0, s_abs2), tol);
        const double f1 = dncf_cdf(1.0, dncf_params(me, cc.g1, s_abs2), tol);
        return Probability(0.5 * (f0 + 1.0 - f1));
    }

    namespace
    {
        // Nonzero eigenvalues of H|x via a dense route: R^{1/2} from the
        // spectral decomposition of R, then eigenvalues of R^{1/2} M R^{1/2}.
        std::pair<double, double> dense_h_eigenvalues(const CompositeChannel &cc,
                                                      double sigma_s2, const CVec &g)
        {
            const auto n = g.size();
            const CMat r = sigma_s2 * (g * g.adjoint()) + CMat::Identity(n, n);
            Eigen::SelfAdjointEigenSolver<CMat> es_r(r);
            const CMat r_half = es_r.operatorSqrt();
            const CMat m = decision_matrix(cc);
            Eigen::SelfAdjointEigenSolver<CMat> es_h(CMat(r_half * m * r_half), Eigen::EigenvaluesOnly);
            const auto &ev = es_h.eigenvalues();
            return {ev(0), ev(n - 1)};
        }

        AlParams closed_form_al(double affine, double bracket_a, double rho2)
        {
            const double root = std::sqrt((bracket_a + 2.0) * (bracket_a + 2.0) - 4.0 * rho2);
            return {affine - 0.5 * root, affine + 0.5 * root};
        }
    }

    std::pair<AlParams, AlParams> al_params(const CompositeChannel &cc, double sigma_s2)
    {
        if (!(sigma_s2 > 0.0))
            throw std::invalid_argument("al_params: sigma_s2 must be positive");
        const double n0s = cc.g0.squaredNorm();
        const double n1s = cc.g1.squaredNorm();
        const double ip2 = std::norm(cc.g0.dot(cc.g1));
        const double gram = n0s * n1s - ip2;
        if (gram <= 0.0)
            throw InseparableHypotheses("al_params: g0 and g1 are parallel");
        const double rho2 = ip2 / (n0s * n1s);

        const double a0 = sigma_s2 * gram / n1s;
        const double a1 = sigma_s2 * gram / n0s;
        const AlParams p0 = closed_form_al(0.5 * a0, a0, rho2);
        const AlParams p1 = closed_form_al(-0.5 * a1, a1, rho2);

        const auto [d0_lo, d0_hi] = dense_h_eigenvalues(cc, sigma_s2, cc.g0);
        const auto [d1_lo, d1_hi] = dense_h_eigenvalues(cc, sigma_s2, cc.g1);
        const auto rel_err = [](double a, double b)
        { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}); };
        if (rel_err(p0.lambda1, d0_lo) > 1e-8 || rel_err(p0.lambda2, d0_hi) > 1e-8 ||
            rel_err(p1.lambda1, d1_lo) > 1e-8 || rel_err(p1.lambda2, d1_hi) > 1e-8)
            throw std::runtime_error("al_params: closed form disagrees with the dense eigensolver of H|x");

        return {p0, p1};
    }

    Probability al_cdf(double zeta, const AlParams &params)
    {
        if (!(params.lambda1 < 0.0) || !(params.lambda2 > 0.0))
            throw std::invalid_argument("al_cdf: need lambda1 < 0 < lambda2");
        const double span = params.lambda2 - params.lambda1;
        if (zeta < 0.0)
            return Probability(-params.lambda1 / span * std::exp(-zeta / params.lambda1));
        return Probability(1.0 - params.lambda2 / span * std::exp(-zeta / params.lambda2));
    }

    double al_quantile(double p, const AlParams &params)
    {
        if (!(p > 0.0) || !(p < 1.0))
            throw std::invalid_argument("al_quantile: need p in (0, 1)");
        const double span = params.lambda2 - params.lambda1;
        const double p_at_zero = -params.lambda1 / span;
        if (p <= p_at_zero)
            return -params.lambda1 * std::log(p * span / (-params.lambda1));
        return -params.lambda2 * std::log((1.0 - p) * span / params.lambda2);
    }

    Probability optimum_pe_gaussian(const AlParams &params_x0, const AlParams &params_x1)
    {
        const double f0 = al_cdf(0.0, params_x0);
        const double miss1 = params_x1.lambda2 / (params_x1.lambda2 - params_x1.lambda1);
        return Probability(0.5 * (f0 + miss1));
    }

    double noncentrality_theta(const ChannelPair &channels, const BdAlphabet &alphabet,
                               double s_abs2)
    {
        const CompositeChannel cc = composite_channel(channels, alphabet);
        const double n0s = cc.g0.squaredNorm();
        const double theta = s_abs2 * (cc.g1.squaredNorm() - std::norm(cc.g1.dot(cc.g0)) / n0s);
        return theta < 0.0 ? 0.0 : theta;
    }

    Probability simplified_pf(double v_t, int n_r)
    {
        if (n_r < 2)
            throw std::invalid_argument("simplified_pf: n_r must be >= 2");
        return regularized_upper_gamma(static_cast<double>(n_r - 1), v_t);
    }

    double threshold_for_pf(double pf, int n_r)
    {
        if (n_r < 2)
            throw std::invalid_argument("threshold_for_pf: n_r must be >= 2");
        return inv_regularized_upper_gamma(static_cast<double>(n_r - 1), pf);
    }

    Probability simplified_pd(double theta, int n_r, double pf)
    {
        if (theta < 0.0)
            throw std::invalid_argument("simplified_pd: theta must be >= 0");
        const double v_t = threshold_for_pf(pf, n_r);
        return marcum_q(n_r - 1, std::sqrt(2.0 * theta), std::sqrt(2.0 * v_t));
    }

    Probability simplified_pe(double pf, double pd)
    {
        return Probability(0.5 * (pf + 1.0 - pd));
    }

    SimplifiedLaw simplified_law(int n_r, double theta, double pf_target)
    {
        SimplifiedLaw law;
        law.dof = 2 * (n_r - 1);
        law.theta = theta;
        law.v_t = threshold_for_pf(pf_target, n_r);
        return law;
    }

    ThetaMapResult theta_map(const ArrayGeometry &geometry, const BdAlphabet &alphabet,
                             double gamma_db, const ThetaMapGrid &grid)
    {
        if (grid.nx < 1 || grid.ny < 1)
            throw std::invalid_argument("theta_map: grid must have nx >= 1 and ny >= 1");
        const double d0_ref = (geometry.tx_pos - geometry.antenna_pos[static_cast<std::size_t>(geometry.ref_index - 1)]).norm();
        const double s_abs = snr_to_amplitude(gamma_db, d0_ref);
        const double s_abs2 = s_abs * s_abs;

        ThetaMapResult out;
        out.nx = grid.nx;
        out.ny = grid.ny;
        const auto total = static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny);
        out.x.reserve(total);
        out.y.reserve(total);
        out.theta_db.reserve(total);

        for (int iy = 0; iy < grid.ny; ++iy)
        {
            const double y = grid.ny == 1 ? grid.y_min
                                          : grid.y_min + (grid.y_max - grid.y_min) * iy / (grid.ny - 1);
            for (int ix = 0; ix < grid.nx; ++ix)
            {
                const double x = grid.nx == 1 ? grid.x_min
                                              : grid.x_min + (grid.x_max - grid.x_min) * ix / (grid.nx - 1);
                out.x.push_back(x);
                out.y.push_back(y);
                double theta_db = std::numeric_limits<double>::quiet_NaN();
                try
                {
                    const DistanceSet d = path_distances(geometry, Vec2(x, y));
                    const ChannelPair ch = friis_channels(d);
                    const double theta = noncentrality_theta(ch, alphabet, s_abs2);
                    theta_db = 10.0 * std::log10(theta);
                }
                catch (const std::invalid_argument &)
                {
                    // singular grid point (BD coincides with a node), keep NaN
                }
                out.theta_db.push_back(theta_db);
            }
        }
        return out;
    }
}
