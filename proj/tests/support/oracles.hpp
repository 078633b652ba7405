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

#ifndef AMBC_TESTS_ORACLES_HPP
#define AMBC_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

#include "ambc/rng.hpp"
#include "ambc/types.hpp"

namespace ambc::test
{
    // Adaptive Simpson quadrature; independent of every library code path it
    // is used to check.
    inline double simpson_step(const std::function<double(double)> &f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol, int depth)
    {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }

    inline double integrate(const std::function<double(double)> &f, double a, double b,
                            double tol = 1e-13)
    {
        const double m = 0.5 * (a + b);
        const double fa = f(a), fm = f(m), fb = f(b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
    }

    inline CVec random_cvec(int n, Rng &rng)
    {
        CVec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = rng.complex_normal();
        return v;
    }
}

#endif
