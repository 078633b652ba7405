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

#ifndef AMBC_GEOMETRY_HPP
#define AMBC_GEOMETRY_HPP

#include <vector>

#include "ambc/types.hpp"

namespace ambc
{
    // Uniform-linear-array orientation: broadside (along y, the default) or
    // end-fire (along x, colinear with the Tx-Rx baseline).
    enum class ArrayAxis
    {
        Y,
        X
    };

    // 2-D deployment: ambient source (Tx) and the reference antenna sit on the
    // x-axis, symmetric about the origin. The uniform linear array runs
    // through the reference antenna along the configured axis. All lengths are
    // in carrier wavelengths, so the wavelength cancels out of every gain
    // below.
    struct ArrayGeometry
    {
        int n_r = 0;                   // antenna count, >= 2
        double spacing = 0.5;          // adjacent element separation
        int ref_index = 0;             // 1-based, ceil(n_r / 2)
        ArrayAxis axis = ArrayAxis::Y;
        Vec2 tx_pos{0.0, 0.0};         // (-d0/2, 0)
        std::vector<Vec2> antenna_pos; // element l-1 offset (l - ref_index) * spacing from (d0/2, 0)
    };

    // Euclidean node distances. d0/d1 are the reference-antenna entries.
    struct DistanceSet
    {
        std::vector<double> d0l; // Tx  -> antenna l
        std::vector<double> d1l; // BD  -> antenna l
        double d2 = 0.0;         // Tx  -> BD
        double d0 = 0.0;
        double d1 = 0.0;
    };

    // Simplified Friis channels (amplitude gains):
    //   alpha_l = exp(j 2 pi d0l) / (4 pi d0l)
    //   beta_l  = exp(j 2 pi (d2 + d1l)) / ((4 pi d2)(4 pi d1l))
    struct ChannelPair
    {
        CVec alpha;
        CVec beta;
    };

    ArrayGeometry build_array(int n_r, double spacing, double d0, ArrayAxis axis = ArrayAxis::Y);

    // Throws std::invalid_argument when the BD coincides with a node.
    DistanceSet path_distances(const ArrayGeometry &geometry, const Vec2 &bd_pos);

    ChannelPair friis_channels(const DistanceSet &distances);

    // Direct-to-backscatter power ratio 10 log10(|alpha|^2 / |beta|^2).
    double power_ratio_delta_db(const ChannelPair &channels);

    // Restriction of a DistanceSet to the reference antenna. The single-antenna
    // ratio (4 pi d1 d2 / d0)^2 is the quantity behind the quoted ~33.7 dB
    // direct-path advantage at d0 = 80, d1 = 4.
    DistanceSet reference_only(const DistanceSet &distances);

    // Rescales (alpha, beta) jointly by 1/|alpha| and reports the factor the
    // ambient amplitude must absorb so every product s*alpha, s*beta -- and
    // therefore every detector statistic -- is unchanged.
    struct NormalizedChannels
    {
        ChannelPair channels;
        double amplitude_scale = 1.0; // multiply |s| by this
    };
    NormalizedChannels normalize_channels(const ChannelPair &channels);
}

#endif
