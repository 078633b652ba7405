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

#ifndef AMBC_RUNNER_HPP
#define AMBC_RUNNER_HPP

#include "ambc/config.hpp"
#include "ambc/table.hpp"

namespace ambc
{
    // Config-driven experiment commands behind the CLI. Each returns the
    // result table; the CLI renders it to CSV or its JSON mirror.

    // Every scenario block crossed with the gamma axis. Rows sorted by
    // (receiver, gamma_db); per-row failures land in the `error` column.
    Table cmd_ber_sweep(const ExperimentConfig &config);

    // Exactly one scenario block; n_r list (default: the block's n_r) crossed
    // with the pf grid.
    Table cmd_roc(const ExperimentConfig &config);

    // Exactly one scenario block plus a [grid] section; row-major theta map.
    Table cmd_theta_map(const ExperimentConfig &config);

    // Exactly one scenario block; l list crossed with the method list.
    Table cmd_estimation_bench(const ExperimentConfig &config);
}

#endif
