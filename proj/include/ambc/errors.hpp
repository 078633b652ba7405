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

#ifndef AMBC_ERRORS_HPP
#define AMBC_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "ambc/types.hpp"

namespace ambc
{
    // The two composite channel directions coincide (kappa = 0): the optimum
    // receiver cannot separate the hypotheses. The simplified receiver may
    // still be constructible.
    class InseparableHypotheses : public std::runtime_error
    {
    public:
        explicit InseparableHypotheses(const std::string &msg) : std::runtime_error(msg) {}
    };

    // A truncated-series evaluation would exceed its term budget. Callers are
    // expected to fall back to Monte-Carlo estimation.
    class SeriesBudgetExceeded : public std::runtime_error
    {
    public:
        explicit SeriesBudgetExceeded(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Sample covariance matrix is singular (L < N_r, or degenerate samples).
    class NotEnoughSamples : public std::runtime_error
    {
    public:
        explicit NotEnoughSamples(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Power iteration did not meet its tolerance within max_iter steps.
    // Carries the last iterate so callers can inspect or reuse it.
    class PowerIterationNoConvergence : public std::runtime_error
    {
    public:
        PowerIterationNoConvergence(const std::string &msg, CVec last)
            : std::runtime_error(msg), last_iterate(std::move(last)) {}
        CVec last_iterate;
    };

    // Top two singular values coincide; the dominant direction is ambiguous.
    class SingularValueTie : public std::runtime_error
    {
    public:
        explicit SingularValueTie(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Malformed experiment config. line = 0 when no line applies.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(int line_no, const std::string &msg)
            : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
              line(line_no) {}
        int line;
    };
}

#endif
