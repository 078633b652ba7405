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

#include "ambc/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "ambc/errors.hpp"

namespace ambc
{
    CMat sample_covariance(const CMat &y_p)
    {
        if (y_p.cols() < 1 || y_p.rows() < 1)
            throw std::invalid_argument("sample_covariance: empty sample matrix");
        CMat r = (y_p * y_p.adjoint()) / static_cast<double>(y_p.cols());
        // enforce exact Hermitian symmetry against round-off
        return 0.5 * (r + CMat(r.adjoint()));
    }

    BeamformerEstimate estimate_inv_cov(const CMat &y_p)
    {
        const auto n_r = y_p.rows();
        if (y_p.cols() < n_r)
            throw NotEnoughSamples("estimate_inv_cov: need L >= n_r samples, got L = " +
                                   std::to_string(y_p.cols()) + " for n_r = " + std::to_string(n_r));
        const CMat r_p = sample_covariance(y_p);
        Eigen::FullPivLU<CMat> lu(r_p);
        if (!lu.isInvertible())
            throw NotEnoughSamples("estimate_inv_cov: sample covariance is singular");
        BeamformerEstimate est;
        est.method = EstimatorMethod::InvCov;
        est.g_matrix = lu.inverse();
        return est;
    }

    BeamformerEstimate estimate_svd(const CMat &y_p)
    {
        if (y_p.norm() == 0.0)
            throw std::invalid_argument("estimate_svd: zero sample matrix");
        Eigen::JacobiSVD<CMat> svd(y_p, Eigen::ComputeThinU);
        const auto &sv = svd.singularValues();
        if (sv.size() > 1 && sv[0] - sv[1] <= 1e-12 * sv[0])
            throw SingularValueTie("estimate_svd: top singular values tied, dominant direction ambiguous");
        BeamformerEstimate est;
        est.method = EstimatorMethod::Svd;
        est.g_hat = svd.matrixU().col(0);
        est.g_matrix = CMat::Identity(y_p.rows(), y_p.rows()) - est.g_hat * est.g_hat.adjoint();
        return est;
    }

    BeamformerEstimate estimate_power_iteration(const CMat &y_p, double tol, int max_iter)
    {
        if (y_p.norm() == 0.0)
            throw std::invalid_argument("estimate_power_iteration: zero sample matrix");
        if (!(tol > 0.0) || max_iter < 1)
            throw std::invalid_argument("estimate_power_iteration: need tol > 0 and max_iter >= 1");

        const CMat a = y_p * y_p.adjoint();
        CVec v = y_p.col(0);
        if (v.norm() == 0.0)
            v = CVec::Ones(y_p.rows());
        v.normalize();

        for (int k = 0; k < max_iter; ++k)
        {
            CVec next = a * v;
            const double norm = next.norm();
            if (norm == 0.0)
                throw PowerIterationNoConvergence("estimate_power_iteration: iterate annihilated", v);
            next /= norm;
            const double dist = phase_aligned_distance(next, v);
            v = next;
            if (dist < tol)
            {
                BeamformerEstimate est;
                est.method = EstimatorMethod::PowerIter;
                est.g_hat = v;
                est.g_matrix = CMat::Identity(y_p.rows(), y_p.rows()) - v * v.adjoint();
                return est;
            }
        }
        throw PowerIterationNoConvergence("estimate_power_iteration: no convergence within max_iter", v);
    }

    double alignment(const CVec &g_hat, const CVec &g)
    {
        const double nh = g_hat.norm();
        const double ng = g.norm();
        if (nh == 0.0 || ng == 0.0)
            throw std::invalid_argument("alignment: zero vector");
        return std::min(1.0, std::abs(g_hat.dot(g)) / (nh * ng));
    }
}
