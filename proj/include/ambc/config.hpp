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

#ifndef AMBC_CONFIG_HPP
#define AMBC_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ambc/analytics.hpp"
#include "ambc/simulation.hpp"

namespace ambc
{
    // Flat key = value experiment description with [section] headers:
    //   [run]                seed, trials, block_size, threads
    //   [scenario NAME]      geometry, modulation, ambient, receiver, csi, ...
    //   [sweep]              gamma_db (start:stop:step or list), n_r, l,
    //                        methods, pf
    //   [grid]               theta-map extent and resolution
    //   [output]             path, json
    // Unknown sections or keys are rejected with their line number.

    struct RunParams
    {
        std::uint64_t seed = 1;
        std::int64_t trials = 100000;
        std::int64_t block_size = 1000;
        int threads = 0;
    };

    struct ScenarioBlock
    {
        std::string name;
        Scenario scenario;
    };

    struct ExperimentConfig
    {
        RunParams run;
        std::vector<ScenarioBlock> scenarios;

        std::vector<double> gamma_axis;
        std::vector<int> n_r_list;
        std::vector<int> l_list;
        std::vector<CsiMode> method_list;
        std::vector<double> pf_grid;

        ThetaMapGrid grid;
        bool has_grid = false;

        std::string output_path = "out.csv";
        bool json_mirror = false;
    };

    // Throws ConfigError (with line number) on any malformed input.
    ExperimentConfig parse_config_text(const std::string &text);
    ExperimentConfig load_config(const std::string &path);

    // Canonical text form; parse(serialize(parse(t))) == parse(t).
    std::string serialize_config(const ExperimentConfig &config);

    std::string modulation_name(const BdAlphabet &alphabet); // "bpsk", "ook" or "custom"
}

#endif
