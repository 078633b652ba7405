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
#include <complex>

#include "ambc/signal.hpp"

using namespace ambc;

TEST_SUITE("signal")
{
    TEST_CASE("snr_to_amplitude inverts the reference-antenna SNR definition")
    {
        CHECK(snr_to_amplitude(0.0, 1.0 / (4.0 * M_PI)) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(snr_to_amplitude(28.0, 80.0) == doctest::Approx(2.525e4).epsilon(1e-3));
        const double a = snr_to_amplitude(7.0, 80.0);
        CHECK(snr_to_amplitude(27.0, 80.0) == doctest::Approx(10.0 * a).epsilon(1e-12));
    }

    TEST_CASE("constant-modulus draws have exact power")
    {
        AmbientSpec spec;
        spec.kind = AmbientSpec::Kind::ConstantModulus;
        spec.power = 2.0;
        Rng rng(42, 0);
        bool phases_ok = true;
        for (int i = 0; i < 1000; ++i)
        {
            const cplx s = draw_ambient(spec, rng);
            CHECK(std::abs(std::norm(s) - 2.0) < 1e-12);
            // QPSK grid pi/4 + k pi/2
            const double ph = std::arg(s);
            const double k = (ph - M_PI / 4.0) / (M_PI / 2.0);
            if (std::abs(k - std::round(k)) > 1e-9)
                phases_ok = false;
        }
        CHECK(phases_ok);
    }

    TEST_CASE("gaussian ambient moments")
    {
        AmbientSpec spec;
        spec.kind = AmbientSpec::Kind::Gaussian;
        spec.power = 1.0;
        Rng rng(11, 0);
        const int n = 1000000;
        double p = 0.0;
        cplx mean = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const cplx s = draw_ambient(spec, rng);
            p += std::norm(s);
            mean += s;
        }
        CHECK(p / n == doctest::Approx(1.0).epsilon(0.01));
        CHECK(std::abs(mean) / static_cast<double>(n) < 0.005);
    }

    TEST_CASE("qam16 moments")
    {
        AmbientSpec spec;
        spec.kind = AmbientSpec::Kind::Qam16;
        spec.power = 1.0;
        Rng rng(12, 0);
        const int n = 1000000;
        double p = 0.0;
        cplx mean = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const cplx s = draw_ambient(spec, rng);
            p += std::norm(s);
            mean += s;
        }
        CHECK(std::abs(mean.real()) / n < 0.005);
        CHECK(std::abs(mean.imag()) / n < 0.005);
        CHECK(p / n == doctest::Approx(1.0).epsilon(0.01));
    }

    TEST_CASE("received_sample composes g(x) s + n")
    {
        ChannelPair c;
        c.alpha = CVec(2);
        c.alpha << cplx(1.0, 0.0), cplx(0.0, 1.0);
        c.beta = CVec(2);
        c.beta << cplx(0.1, 0.0), cplx(0.0, 0.1);
        Rng rng(5, 0);
        const cplx s(2.0, -1.0);

        SUBCASE("noise suppressed, x = 0")
        {
            const RxSample r = received_sample(c, s, cplx(0.0, 0.0), rng, false);
            CHECK((r.y - CVec(s * c.alpha)).cwiseAbs().maxCoeff() == 0.0);
        }
        SUBCASE("noise suppressed, x = 1")
        {
            const RxSample r = received_sample(c, s, cplx(1.0, 0.0), rng, false);
            CHECK((r.y - CVec(s * (c.alpha + c.beta))).cwiseAbs().maxCoeff() == 0.0);
        }
        SUBCASE("s = 0: noise-only per-component variance and independence")
        {
            const int n = 1000000;
            double v0 = 0.0, v1 = 0.0;
            cplx cross = 0.0;
            for (int i = 0; i < n; ++i)
            {
                const RxSample r = received_sample(c, cplx(0.0, 0.0), cplx(1.0, 0.0), rng);
                v0 += std::norm(r.y[0]);
                v1 += std::norm(r.y[1]);
                cross += r.y[0] * std::conj(r.y[1]);
            }
            CHECK(v0 / n == doctest::Approx(1.0).epsilon(0.01));
            CHECK(v1 / n == doctest::Approx(1.0).epsilon(0.01));
            CHECK(std::abs(cross) / static_cast<double>(n) < 0.01);
        }
    }

    TEST_CASE("preambles")
    {
        const auto dual = make_preambles(30, bpsk());
        REQUIRE(dual.size() == 60);
        for (int i = 0; i < 30; ++i)
        {
            CHECK(dual[static_cast<std::size_t>(i)] == cplx(-1.0, 0.0));
            CHECK(dual[static_cast<std::size_t>(30 + i)] == cplx(1.0, 0.0));
        }
        const auto tiny = make_preambles(1, ook());
        REQUIRE(tiny.size() == 2);
        CHECK(tiny[0] == cplx(0.0, 0.0));
        CHECK(tiny[1] == cplx(1.0, 0.0));
        const auto single = make_preambles(2, ook(), false);
        REQUIRE(single.size() == 2);
        CHECK(single[0] == cplx(0.0, 0.0));
        CHECK(single[1] == cplx(0.0, 0.0));
        CHECK_THROWS_AS(make_preambles(0, ook()), std::invalid_argument);
    }

    TEST_CASE("reproducibility: identical (seed, stream) gives identical draws")
    {
        Rng a(987654321, 17), b(987654321, 17);
        for (int i = 0; i < 1000; ++i)
            REQUIRE(a.next_u64() == b.next_u64());

        ChannelPair c;
        c.alpha = CVec::Ones(3);
        c.beta = 0.5 * CVec::Ones(3);
        Rng r1(3, 9), r2(3, 9);
        const RxSample s1 = received_sample(c, cplx(1.0, 1.0), cplx(1.0, 0.0), r1);
        const RxSample s2 = received_sample(c, cplx(1.0, 1.0), cplx(1.0, 0.0), r2);
        CHECK((s1.y - s2.y).cwiseAbs().maxCoeff() == 0.0);

        // different streams decorrelate
        Rng r3(3, 10);
        const RxSample s3 = received_sample(c, cplx(1.0, 1.0), cplx(1.0, 0.0), r3);
        CHECK((s1.y - s3.y).cwiseAbs().maxCoeff() > 0.0);
    }
}
