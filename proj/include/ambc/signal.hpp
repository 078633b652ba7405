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

#ifndef AMBC_SIGNAL_HPP
#define AMBC_SIGNAL_HPP

#include <vector>

#include "ambc/geometry.hpp"
#include "ambc/rng.hpp"
#include "ambc/types.hpp"

namespace ambc
{
    // Ambient-source law. `power` is |s|^2 for constant-modulus symbols and
    // the average power E|s|^2 for QAM-16 / Gaussian draws.
    struct AmbientSpec
    {
        enum class Kind
        {
            ConstantModulus, // M-PSK, exact |s|^2 = power
            Qam16,           // unit-average-power square grid, scaled
            Gaussian         // s ~ CN(0, power)
        };
        Kind kind = Kind::ConstantModulus;
        int psk_order = 4;
        double power = 1.0;
    };

    // Binary BD reflection alphabet {x0, x1}, |x| <= 1 (passive reflection).
    struct BdAlphabet
    {
        cplx x0{0.0, 0.0};
        cplx x1{1.0, 0.0};
    };

    inline BdAlphabet ook() { return {cplx(0.0, 0.0), cplx(1.0, 0.0)}; }
    inline BdAlphabet bpsk() { return {cplx(-1.0, 0.0), cplx(1.0, 0.0)}; }

    // One receiver sample per BD symbol (no pulse shaping):
    //   y = (alpha + x beta) s + n,  n ~ CN(0, I)
    struct RxSample
    {
        CVec y;
        cplx truth_x;
        cplx truth_s;
    };

    // |s| such that (1 / (4 pi d0))^2 |s|^2 = 10^(gamma_db / 10); gamma is the
    // legacy-system SNR seen by the reference antenna.
    double snr_to_amplitude(double gamma_db, double d0);

    cplx draw_ambient(const AmbientSpec &spec, Rng &rng);

    // `with_noise = false` is a test hook that returns the clean mean g(x) s.
    RxSample received_sample(const ChannelPair &channels, cplx s, cplx x, Rng &rng,
                             bool with_noise = true);

    // Dual form: L copies of x0 followed by L copies of x1. The simplified
    // receiver needs only the first block, so `dual = false` drops the second.
    std::vector<cplx> make_preambles(int preamble_len, const BdAlphabet &alphabet, bool dual = true);
}

#endif
