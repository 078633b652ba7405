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

#include <doctest.h>

#include <cmath>

#include "ambc/geometry.hpp"

using namespace ambc;

namespace
{
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Vec2 paper_bd() { return Vec2(40.0 - 4.0 * inv_sqrt2, 4.0 * inv_sqrt2); }
}

TEST_SUITE("geometry")
{
    TEST_CASE("build_array places Tx, reference antenna and elements")
    {
        const ArrayGeometry g = build_array(16, 0.5, 80.0);
        CHECK(g.ref_index == 8);
        CHECK(g.tx_pos.x() == doctest::Approx(-40.0));
        CHECK(g.tx_pos.y() == 0.0);
        CHECK(g.antenna_pos[7].x() == doctest::Approx(40.0));
        CHECK(g.antenna_pos[7].y() == 0.0);

        const ArrayGeometry g2 = build_array(2, 0.5, 2.0);
        CHECK(g2.ref_index == 1);
        CHECK((g2.antenna_pos[1] - g2.antenna_pos[0]).norm() == doctest::Approx(0.5));

        const ArrayGeometry g3 = build_array(3, 0.5, 10.0);
        CHECK(g3.ref_index == 2);
        // symmetric about the reference point (5, 0)
        CHECK(g3.antenna_pos[0].y() == doctest::Approx(-g3.antenna_pos[2].y()));
        CHECK(g3.antenna_pos[1].x() == doctest::Approx(5.0));
        CHECK(g3.antenna_pos[1].y() == 0.0);
    }

    TEST_CASE("build_array rejects degenerate inputs")
    {
        CHECK_THROWS_AS(build_array(1, 0.5, 10.0), std::invalid_argument);
        CHECK_THROWS_AS(build_array(4, 0.0, 10.0), std::invalid_argument);
        CHECK_THROWS_AS(build_array(4, 0.5, -1.0), std::invalid_argument);
    }

    TEST_CASE("path_distances matches the paper placement")
    {
        const ArrayGeometry g = build_array(16, 0.5, 80.0);
        const DistanceSet d = path_distances(g, paper_bd());
        CHECK(d.d1 == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(d.d0 == doctest::Approx(80.0).epsilon(1e-12));
        CHECK(d.d2 == doctest::Approx(77.223388).epsilon(1e-6));

        SUBCASE("3-4-5 triangle for the Tx-BD leg")
        {
            const DistanceSet t = path_distances(g, g.tx_pos + Vec2(3.0, 4.0));
            CHECK(t.d2 == doctest::Approx(5.0).epsilon(1e-14));
        }
        SUBCASE("coincident positions rejected")
        {
            CHECK_THROWS_AS(path_distances(g, g.tx_pos), std::invalid_argument);
            CHECK_THROWS_AS(path_distances(g, g.antenna_pos[3]), std::invalid_argument);
        }
    }

    TEST_CASE("friis magnitudes and phases")
    {
        // integer-wavelength direct path: phase wraps to 0
        DistanceSet d;
        d.d0l = {80.0, 80.0};
        d.d1l = {4.0, 5.0};
        d.d2 = 77.0;
        d.d0 = 80.0;
        d.d1 = 4.0;
        const ChannelPair c = friis_channels(d);
        CHECK(std::abs(c.alpha[0]) == doctest::Approx(1.0 / (320.0 * M_PI)).epsilon(1e-14));
        CHECK(c.alpha[0].real() == doctest::Approx(9.947e-4).epsilon(1e-3));
        CHECK(std::abs(c.alpha[0].imag()) < 1e-12);

        for (int l = 0; l < 2; ++l)
        {
            const double identity = std::abs(c.beta[l]) * (4.0 * M_PI * d.d2) * (4.0 * M_PI * d.d1l[l]);
            CHECK(identity == doctest::Approx(1.0).epsilon(1e-14));
        }
    }

    TEST_CASE("reference-antenna delta reproduces the 33.7 dB anchor")
    {
        const ArrayGeometry g = build_array(16, 0.5, 80.0);
        const DistanceSet d = path_distances(g, paper_bd());
        const double delta_ref = power_ratio_delta_db(friis_channels(reference_only(d)));
        CHECK(delta_ref == doctest::Approx(33.7).epsilon(0.003)); // +-0.1 dB
        // the full-array ratio sits below the single-antenna anchor
        const double delta_full = power_ratio_delta_db(friis_channels(d));
        CHECK(delta_full < delta_ref);
        CHECK(delta_full > 32.0);
    }

    TEST_CASE("power ratio basics")
    {
        ChannelPair c;
        c.alpha = CVec::Ones(4);
        c.beta = c.alpha;
        CHECK(power_ratio_delta_db(c) == doctest::Approx(0.0));
        c.beta = c.alpha / std::sqrt(10.0);
        CHECK(power_ratio_delta_db(c) == doctest::Approx(10.0).epsilon(1e-12));
        c.beta = CVec::Zero(4);
        CHECK_THROWS_AS(power_ratio_delta_db(c), std::invalid_argument);
    }

    TEST_CASE("distance round trip from |alpha|")
    {
        const ArrayGeometry g = build_array(16, 0.5, 80.0);
        const DistanceSet d = path_distances(g, paper_bd());
        const ChannelPair c = friis_channels(d);
        for (Eigen::Index l = 0; l < c.alpha.size(); ++l)
        {
            const double rec = 1.0 / (4.0 * M_PI * std::abs(c.alpha[l]));
            CHECK(rec == doctest::Approx(d.d0l[static_cast<std::size_t>(l)]).epsilon(1e-12));
        }
    }

    TEST_CASE("pathloss is monotone along an outbound ray")
    {
        const ArrayGeometry g = build_array(8, 0.5, 80.0);
        double prev = 1e300;
        for (int k = 1; k <= 20; ++k)
        {
            const DistanceSet d = path_distances(g, Vec2(0.0, 5.0 * k));
            const double pb = friis_channels(d).beta.squaredNorm();
            CHECK(pb < prev);
            prev = pb;
        }
    }

    TEST_CASE("mirror symmetry")
    {
        SUBCASE("exact for an array on the x-axis")
        {
            const ArrayGeometry g = build_array(16, 0.5, 80.0, ArrayAxis::X);
            const ChannelPair up = friis_channels(path_distances(g, paper_bd()));
            const ChannelPair dn = friis_channels(path_distances(g, Vec2(paper_bd().x(), -paper_bd().y())));
            CHECK((up.alpha - dn.alpha).cwiseAbs().maxCoeff() == 0.0);
            CHECK((up.beta - dn.beta).cwiseAbs().maxCoeff() == 0.0);
        }
        SUBCASE("element-reversed for an odd broadside array")
        {
            const ArrayGeometry g = build_array(15, 0.5, 80.0);
            const ChannelPair up = friis_channels(path_distances(g, paper_bd()));
            const ChannelPair dn = friis_channels(path_distances(g, Vec2(paper_bd().x(), -paper_bd().y())));
            const CVec rev = dn.beta.reverse();
            for (Eigen::Index l = 0; l < up.beta.size(); ++l)
                CHECK(std::abs(up.beta[l]) == doctest::Approx(std::abs(rev[l])).epsilon(1e-13));
        }
    }

    TEST_CASE("normalize_channels preserves the s*channel products")
    {
        const ArrayGeometry g = build_array(8, 0.5, 80.0);
        const ChannelPair c = friis_channels(path_distances(g, paper_bd()));
        const NormalizedChannels nc = normalize_channels(c);
        CHECK(nc.channels.alpha.norm() == doctest::Approx(1.0).epsilon(1e-14));
        const double s = 123.456;
        const CVec lhs = (s * nc.amplitude_scale) * nc.channels.alpha;
        const CVec rhs = s * c.alpha;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12 * rhs.norm());
    }
}
