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

#include "ambc/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace ambc
{
    Probability::Probability(double v)
    {
        if (v < 0.0)
        {
            if (v < -1e-12)
                throw std::domain_error("Probability: value " + std::to_string(v) + " below 0");
            v = 0.0;
        }
        else if (v > 1.0)
        {
            if (v > 1.0 + 1e-12)
                throw std::domain_error("Probability: value " + std::to_string(v) + " above 1");
            v = 1.0;
        }
        value_ = v;
    }

    Probability regularized_upper_gamma(double a, double x)
    {
        if (!(a > 0.0) || x < 0.0)
            throw std::invalid_argument("regularized_upper_gamma: need a > 0 and x >= 0");
        return Probability(boost::math::gamma_q(a, x));
    }

    double inv_regularized_upper_gamma(double a, double p)
    {
        if (!(a > 0.0))
            throw std::invalid_argument("inv_regularized_upper_gamma: need a > 0");
        if (!(p > 0.0) || p > 1.0)
            throw std::invalid_argument("inv_regularized_upper_gamma: need p in (0, 1]");
        if (p == 1.0)
            return 0.0;
        return boost::math::gamma_q_inv(a, p);
    }

    Probability marcum_q(int m, double a, double b)
    {
        if (m < 1 || a < 0.0 || b < 0.0)
            throw std::invalid_argument("marcum_q: need m >= 1, a >= 0, b >= 0");
        if (b == 0.0)
            return Probability(1.0);
        const double x = 0.5 * b * b;
        if (a == 0.0)
            return Probability(boost::math::gamma_q(static_cast<double>(m), x));

        // Q_m(a,b) = sum_k Pois(mu)_k * gamma_q(m + k, x), mu = a^2/2.
        // Walk the Poisson weights outward from the mode so nothing underflows;
        // omitted mass bounds the absolute error.
        const double mu = 0.5 * a * a;
        const auto k0 = static_cast<long>(mu);
        const double log_p0 = -mu + static_cast<double>(k0) * std::log(mu) - std::lgamma(static_cast<double>(k0) + 1.0);
        const double p0 = std::exp(log_p0);
        const double cutoff = p0 * 1e-18;

        double sum = p0 * boost::math::gamma_q(static_cast<double>(m + k0), x);
        double p = p0;
        for (long k = k0 + 1; p > cutoff; ++k)
        {
            p *= mu / static_cast<double>(k);
            sum += p * boost::math::gamma_q(static_cast<double>(m) + static_cast<double>(k), x);
        }
        p = p0;
        for (long k = k0; k > 0 && p > cutoff; --k)
        {
            p *= static_cast<double>(k) / mu;
            sum += p * boost::math::gamma_q(static_cast<double>(m) + static_cast<double>(k - 1), x);
        }
        return Probability(sum);
    }

    namespace detail
    {
        double log_bessel_i_series(int v, double x)
        {
            // ln sum_k (x/2)^(v+2k) / (k! (v+k)!), summed in log space around
            // the dominant term.
            const double lh = std::log(0.5 * x);
            double log_max = -std::numeric_limits<double>::infinity();
            const int k_peak = static_cast<int>(std::max(0.0, 0.5 * (x - v)));
            const int k_hi = k_peak + 40 + static_cast<int>(2.0 * std::sqrt(x) + 0.5 * x);
            // first pass: locate the largest term
            for (int k = 0; k <= k_hi; ++k)
            {
                const double lt = (v + 2.0 * k) * lh - std::lgamma(k + 1.0) - std::lgamma(v + k + 1.0);
                if (lt > log_max)
                    log_max = lt;
            }
            double acc = 0.0;
            for (int k = 0; k <= k_hi; ++k)
            {
                const double lt = (v + 2.0 * k) * lh - std::lgamma(k + 1.0) - std::lgamma(v + k + 1.0);
                acc += std::exp(lt - log_max);
            }
            return log_max + std::log(acc);
        }

        double log_bessel_i_asymptotic(int v, double x)
        {
            // I_v(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(v) / x^k,
            // a_k = prod_{j=1..k} (4v^2 - (2j-1)^2) / (8^k k!); truncated at the
            // smallest term (valid for x well beyond v^2).
            const double mu4 = 4.0 * static_cast<double>(v) * static_cast<double>(v);
            double term = 1.0;
            double sum = 1.0;
            double prev_mag = std::numeric_limits<double>::infinity();
            for (int k = 1; k <= 40; ++k)
            {
                term *= -(mu4 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
                const double mag = std::fabs(term);
                if (mag >= prev_mag || mag < 1e-18)
                {
                    if (mag < 1e-18)
                        sum += term;
                    break;
                }
                sum += term;
                prev_mag = mag;
            }
            return x - 0.5 * std::log(6.283185307179586476925286766559 * x) + std::log(sum);
        }
    }

    double log_bessel_i(int v, double x)
    {
        if (v < 0 || x < 0.0)
            throw std::invalid_argument("log_bessel_i: need v >= 0 and x >= 0");
        if (x == 0.0)
            return v == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
        if (x >= 50.0 && x > static_cast<double>(v) * static_cast<double>(v))
            return detail::log_bessel_i_asymptotic(v, x);
        return detail::log_bessel_i_series(v, x);
    }

    Probability regularized_incomplete_beta(double x, double a, double b)
    {
        if (x < 0.0 || x > 1.0 || !(a > 0.0) || !(b > 0.0))
            throw std::invalid_argument("regularized_incomplete_beta: need x in [0,1], a > 0, b > 0");
        return Probability(boost::math::ibeta(a, b, x));
    }

    double log_beta(double a, double b)
    {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::invalid_argument("log_beta: need a > 0 and b > 0");
        return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    }
}
