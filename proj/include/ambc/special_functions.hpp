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

#ifndef AMBC_SPECIAL_FUNCTIONS_HPP
#define AMBC_SPECIAL_FUNCTIONS_HPP

namespace ambc
{
    // Probability value with construction-time [0, 1] enforcement. Raw results
    // within 1e-12 outside the interval are snapped to the boundary; anything
    // farther out is a numerical bug upstream and throws.
    class Probability
    {
    public:
        Probability() = default;
        explicit Probability(double v);
        operator double() const noexcept { return value_; }
        double value() const noexcept { return value_; }

    private:
        double value_ = 0.0;
    };

    // Regularized upper incomplete gamma Gamma(a, x) / Gamma(a); 1 at x = 0.
    Probability regularized_upper_gamma(double a, double x);

    // x with regularized_upper_gamma(a, x) = p, for p in (0, 1]. p = 0 would
    // be an infinite threshold and throws.
    double inv_regularized_upper_gamma(double a, double p);

    // Generalized Marcum Q_m(a, b): upper tail at b^2 of a noncentral
    // chi-square with 2m degrees of freedom and noncentrality a^2. Absolute
    // accuracy ~1e-9 for the argument ranges of an n_r <= 32, theta <= 1e4
    // receiver. Evaluated as the Poisson(a^2/2) mixture of gamma tails.
    Probability marcum_q(int m, double a, double b);

    // ln I_v(x), overflow-safe. -inf for v >= 1 at x = 0.
    double log_bessel_i(int v, double x);

    // Regularized incomplete beta I_x(a, b).
    Probability regularized_incomplete_beta(double x, double a, double b);

    // ln B(a, b) = lgamma(a) + lgamma(b) - lgamma(a + b).
    double log_beta(double a, double b);

    namespace detail
    {
        // The two internal ln I_v(x) routes, exposed for cross-validation.
        double log_bessel_i_series(int v, double x);
        double log_bessel_i_asymptotic(int v, double x);
    }
}

#endif
