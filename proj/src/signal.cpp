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

#include "ambc/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace ambc
{
    static constexpr double pi = 3.14159265358979323846264338327950288;

    double snr_to_amplitude(double gamma_db, double d0)
    {
        if (!(d0 > 0.0))
            throw std::invalid_argument("snr_to_amplitude: d0 must be positive");
        return std::sqrt(std::pow(10.0, gamma_db / 10.0)) * (4.0 * pi * d0);
    }

    cplx draw_ambient(const AmbientSpec &spec, Rng &rng)
    {
        if (!(spec.power > 0.0))
            throw std::invalid_argument("draw_ambient: power must be positive");
        switch (spec.kind)
        {
        case AmbientSpec::Kind::ConstantModulus:
        {
            if (spec.psk_order < 2)
                throw std::invalid_argument("draw_ambient: PSK order must be >= 2");
            const auto k = rng.bounded(static_cast<std::uint32_t>(spec.psk_order));
            const double phase = pi / spec.psk_order + (2.0 * pi * k) / spec.psk_order;
            return std::polar(std::sqrt(spec.power), phase);
        }
        case AmbientSpec::Kind::Qam16:
        {
            // {+-1, +-3}^2 grid, average power 10 before scaling.
            const auto k = rng.bounded(16);
            const double re = static_cast<double>(2 * static_cast<int>(k & 3u) - 3);
            const double im = static_cast<double>(2 * static_cast<int>((k >> 2) & 3u) - 3);
            return std::sqrt(spec.power / 10.0) * cplx(re, im);
        }
        case AmbientSpec::Kind::Gaussian:
            return std::sqrt(spec.power) * rng.complex_normal();
        }
        throw std::invalid_argument("draw_ambient: unknown ambient kind");
    }

    RxSample received_sample(const ChannelPair &channels, cplx s, cplx x, Rng &rng,
                             bool with_noise)
    {
        const auto n = channels.alpha.size();
        if (n < 2 || channels.beta.size() != n)
            throw std::invalid_argument("received_sample: channels must have n_r >= 2");

        RxSample sample;
        sample.truth_x = x;
        sample.truth_s = s;
        sample.y.resize(n);
        for (Eigen::Index l = 0; l < n; ++l)
        {
            sample.y[l] = (channels.alpha[l] + x * channels.beta[l]) * s;
            if (with_noise)
                sample.y[l] += rng.complex_normal();
        }
        return sample;
    }

    std::vector<cplx> make_preambles(int preamble_len, const BdAlphabet &alphabet, bool dual)
    {
        if (preamble_len < 1)
            throw std::invalid_argument("make_preambles: L must be >= 1");
        std::vector<cplx> seq;
        seq.reserve(static_cast<std::size_t>(dual ? 2 * preamble_len : preamble_len));
        seq.assign(static_cast<std::size_t>(preamble_len), alphabet.x0);
        if (dual)
            seq.insert(seq.end(), static_cast<std::size_t>(preamble_len), alphabet.x1);
        return seq;
    }
}
