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

#include "ambc/detector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ambc/errors.hpp"

namespace ambc
{
    static constexpr double ln_pi = 1.14472988584940017414342735135306;

    CompositeChannel composite_channel(const ChannelPair &channels, const BdAlphabet &alphabet)
    {
        if (alphabet.x0 == alphabet.x1)
            throw std::invalid_argument("composite_channel: alphabet symbols must differ");
        CompositeChannel cc;
        cc.g0 = channels.alpha + alphabet.x0 * channels.beta;
        cc.g1 = channels.alpha + alphabet.x1 * channels.beta;
        if (cc.g0.norm() == 0.0 || cc.g1.norm() == 0.0)
            throw std::invalid_argument("composite_channel: zero composite channel (projector undefined)");
        return cc;
    }

    Projector projector(const CVec &g)
    {
        const double n2 = g.squaredNorm();
        if (n2 == 0.0)
            throw std::invalid_argument("projector: zero vector");
        Projector p;
        p.matrix = CMat::Identity(g.size(), g.size()) - (g * g.adjoint()) / n2;
        return p;
    }

    MEigen m_eigen(const CompositeChannel &cc)
    {
        const double n0 = cc.g0.norm();
        const double n1 = cc.g1.norm();
        const cplx ip = cc.g0.dot(cc.g1); // g0^H g1 (Eigen conjugates the callee)
        const double rho2 = std::norm(ip) / (n0 * n0 * n1 * n1);
        const double kappa2 = 1.0 - rho2;
        if (kappa2 < 1e-14)
            throw InseparableHypotheses("m_eigen: g0 and g1 are parallel (kappa = 0), hypotheses inseparable");

        MEigen me;
        me.kappa = std::sqrt(kappa2);

        // Eigenvectors live in span{g0, g1}. With e0 = g0/|g0| and e1 the unit
        // residual of g1 after projecting out g0 (perp_norm = |g1| kappa),
        // the Proposition-2 vectors, rescaled by g1^H g0 / |g0| to stay finite
        // at g0 ^| g1 (eigenvectors are phase-free), become
        //   u1 ~ -(perp_norm + |g1|) e0 + conj(c) e1
        //   u2 ~ c e0 + (perp_norm + |g1|) e1,    c = e0^H g1.
        const CVec e0 = cc.g0 / n0;
        const cplx c = e0.dot(cc.g1);
        CVec resid = cc.g1 - c * e0;
        const double perp_norm = resid.norm();
        const CVec e1 = resid / perp_norm;

        me.u1 = -(perp_norm + n1) * e0 + std::conj(c) * e1;
        me.u2 = c * e0 + (perp_norm + n1) * e1;
        me.u1.normalize();
        me.u2.normalize();
        return me;
    }

    CMat decision_matrix(const CompositeChannel &cc)
    {
        return (cc.g0 * cc.g0.adjoint()) / cc.g0.squaredNorm() -
               (cc.g1 * cc.g1.adjoint()) / cc.g1.squaredNorm();
    }

    double log_likelihood(const CVec &y, const Projector &beamformer)
    {
        if (y.size() != beamformer.matrix.rows())
            throw std::invalid_argument("log_likelihood: dimension mismatch");
        const double quad = (y.adjoint() * beamformer.matrix * y)(0).real();
        return -quad - static_cast<double>(y.size()) * ln_pi;
    }

    ZStat test_statistic_z(const CVec &y, const MEigen &me)
    {
        const double t = std::norm(me.u1.dot(y));
        const double r = std::norm(me.u2.dot(y));
        ZStat s;
        s.z = me.kappa * (t - r);
        s.zeta = (r == 0.0) ? std::numeric_limits<double>::infinity() : t / r;
        return s;
    }

    cplx optimum_decide(const CVec &y, const MEigen &me, const BdAlphabet &alphabet)
    {
        return test_statistic_z(y, me).z >= 0.0 ? alphabet.x0 : alphabet.x1;
    }

    double simplified_statistic(const CVec &y, const Projector &g0_beamformer)
    {
        if (y.size() != g0_beamformer.matrix.rows())
            throw std::invalid_argument("simplified_statistic: dimension mismatch");
        const double z_s = (y.adjoint() * g0_beamformer.matrix * y)(0).real();
        return z_s < 0.0 ? 0.0 : z_s; // clip the tiny negative round-off
    }

    Hypothesis simplified_decide(double z_s, double v_t)
    {
        if (v_t < 0.0)
            throw std::invalid_argument("simplified_decide: threshold must be >= 0");
        return z_s > v_t ? Hypothesis::H1 : Hypothesis::H0;
    }

    cplx ml_ambient_estimate(const CVec &y, const CVec &g)
    {
        const double n2 = g.squaredNorm();
        if (n2 == 0.0)
            throw std::invalid_argument("ml_ambient_estimate: zero channel");
        return g.dot(y) / n2;
    }
}
