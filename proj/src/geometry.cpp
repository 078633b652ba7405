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

#include "ambc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ambc
{
    static constexpr double two_pi = 6.283185307179586476925286766559;
    static constexpr double four_pi = 12.566370614359172953850573533118;

    ArrayGeometry build_array(int n_r, double spacing, double d0, ArrayAxis axis)
    {
        if (n_r < 2)
            throw std::invalid_argument("build_array: n_r must be >= 2 (decision matrix undefined for a scalar receiver)");
        if (!(spacing > 0.0))
            throw std::invalid_argument("build_array: spacing must be positive");
        if (!(d0 > 0.0))
            throw std::invalid_argument("build_array: d0 must be positive");

        ArrayGeometry g;
        g.n_r = n_r;
        g.spacing = spacing;
        g.ref_index = (n_r + 1) / 2; // ceil(n_r / 2), 1-based
        g.axis = axis;
        g.tx_pos = Vec2(-0.5 * d0, 0.0);
        g.antenna_pos.reserve(static_cast<std::size_t>(n_r));
        for (int l = 1; l <= n_r; ++l)
        {
            const double off = (l - g.ref_index) * spacing;
            g.antenna_pos.emplace_back(axis == ArrayAxis::Y ? Vec2(0.5 * d0, off)
                                                            : Vec2(0.5 * d0 + off, 0.0));
        }
        return g;
    }

    DistanceSet path_distances(const ArrayGeometry &geometry, const Vec2 &bd_pos)
    {
        if ((bd_pos - geometry.tx_pos).norm() == 0.0)
            throw std::invalid_argument("path_distances: BD coincides with the Tx antenna");

        DistanceSet d;
        d.d0l.reserve(geometry.antenna_pos.size());
        d.d1l.reserve(geometry.antenna_pos.size());
        for (const Vec2 &p : geometry.antenna_pos)
        {
            const double d0 = (geometry.tx_pos - p).norm();
            const double d1 = (bd_pos - p).norm();
            if (d1 == 0.0)
                throw std::invalid_argument("path_distances: BD coincides with a receive antenna");
            d.d0l.push_back(d0);
            d.d1l.push_back(d1);
        }
        d.d2 = (geometry.tx_pos - bd_pos).norm();
        d.d0 = d.d0l[static_cast<std::size_t>(geometry.ref_index - 1)];
        d.d1 = d.d1l[static_cast<std::size_t>(geometry.ref_index - 1)];
        return d;
    }

    ChannelPair friis_channels(const DistanceSet &distances)
    {
        const auto n = static_cast<Eigen::Index>(distances.d0l.size());
        if (n == 0 || distances.d1l.size() != distances.d0l.size())
            throw std::invalid_argument("friis_channels: empty or inconsistent DistanceSet");
        if (!(distances.d2 > 0.0))
            throw std::invalid_argument("friis_channels: d2 must be positive");

        ChannelPair c;
        c.alpha.resize(n);
        c.beta.resize(n);
        for (Eigen::Index l = 0; l < n; ++l)
        {
            const double d0 = distances.d0l[static_cast<std::size_t>(l)];
            const double d1 = distances.d1l[static_cast<std::size_t>(l)];
            if (!(d0 > 0.0) || !(d1 > 0.0))
                throw std::invalid_argument("friis_channels: distances must be positive");
            c.alpha[l] = std::polar(1.0 / (four_pi * d0), two_pi * d0);
            c.beta[l] = std::polar(1.0 / ((four_pi * distances.d2) * (four_pi * d1)),
                                   two_pi * (distances.d2 + d1));
        }
        return c;
    }

    double power_ratio_delta_db(const ChannelPair &channels)
    {
        const double pb = channels.beta.squaredNorm();
        if (pb == 0.0)
            throw std::invalid_argument("power_ratio_delta_db: beta is zero (degenerate backscatter path)");
        return 10.0 * std::log10(channels.alpha.squaredNorm() / pb);
    }

    DistanceSet reference_only(const DistanceSet &distances)
    {
        DistanceSet r;
        r.d0l = {distances.d0};
        r.d1l = {distances.d1};
        r.d2 = distances.d2;
        r.d0 = distances.d0;
        r.d1 = distances.d1;
        return r;
    }

    NormalizedChannels normalize_channels(const ChannelPair &channels)
    {
        const double na = channels.alpha.norm();
        if (na == 0.0)
            throw std::invalid_argument("normalize_channels: alpha is zero");
        NormalizedChannels out;
        out.channels.alpha = channels.alpha / na;
        out.channels.beta = channels.beta / na;
        out.amplitude_scale = na;
        return out;
    }
}
