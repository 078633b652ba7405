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

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ambc/config.hpp"
#include "ambc/errors.hpp"
#include "ambc/runner.hpp"
#include "ambc/validation.hpp"

namespace
{
    struct CommonOpts
    {
        std::string config_path;
        std::string output_path; // overrides config
        std::uint64_t seed = 0;
        bool seed_set = false;
        std::int64_t trials = 0;
        bool trials_set = false;
        bool json = false;
    };

    void add_common(CLI::App *cmd, CommonOpts &o)
    {
        cmd->add_option("--config", o.config_path, "experiment config file")->required();
        cmd->add_option("--output", o.output_path, "output path (overrides config; '-' for stdout)");
        cmd->add_option("--seed", o.seed, "seed override")->each([&](const std::string &) { o.seed_set = true; });
        cmd->add_option("--trials", o.trials, "trials override")->each([&](const std::string &) { o.trials_set = true; });
        cmd->add_flag("--json", o.json, "emit the JSON mirror instead of CSV");
    }

    int run_table_command(const CommonOpts &o,
                          const std::function<ambc::Table(const ambc::ExperimentConfig &)> &cmd)
    {
        ambc::ExperimentConfig cfg = ambc::load_config(o.config_path);
        if (o.seed_set)
            cfg.run.seed = o.seed;
        if (o.trials_set)
            cfg.run.trials = o.trials;
        if (!o.output_path.empty())
            cfg.output_path = o.output_path;
        if (o.json)
            cfg.json_mirror = true;

        const ambc::Table table = cmd(cfg);
        const std::string rendered = cfg.json_mirror ? ambc::render_json(table)
                                                     : ambc::render_csv(table);
        if (cfg.output_path == "-")
        {
            std::cout << rendered;
        }
        else
        {
            std::ofstream out(cfg.output_path, std::ios::binary);
            if (!out)
            {
                std::cerr << "error: cannot write '" << cfg.output_path << "'\n";
                return 2;
            }
            out << rendered;
            std::cerr << "wrote " << table.rows.size() << " rows to " << cfg.output_path << "\n";
        }
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"ambc: multi-antenna ambient-backscatter receiver simulator"};
    app.require_subcommand(1);

    CommonOpts ber_o, roc_o, map_o, bench_o;
    auto *ber = app.add_subcommand("ber-sweep", "BER vs gamma for every scenario block");
    add_common(ber, ber_o);
    auto *roc = app.add_subcommand("roc", "empirical and analytic ROC of the simplified receiver");
    add_common(roc, roc_o);
    auto *map = app.add_subcommand("theta-map", "noncentrality theta over a BD-position grid");
    add_common(map, map_o);
    auto *bench = app.add_subcommand("estimation-bench", "beamformer-estimation BER/alignment table");
    add_common(bench, bench_o);

    auto *validate = app.add_subcommand("validate", "run the built-in invariant suite");
    std::uint64_t v_seed = 12345;
    std::int64_t v_draws = 200000;
    std::string v_output;
    validate->add_option("--seed", v_seed, "validation seed");
    validate->add_option("--mc-draws", v_draws, "draws per series-vs-MC check");
    validate->add_option("--output", v_output, "also write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (ber->parsed())
            return run_table_command(ber_o, ambc::cmd_ber_sweep);
        if (roc->parsed())
            return run_table_command(roc_o, ambc::cmd_roc);
        if (map->parsed())
            return run_table_command(map_o, ambc::cmd_theta_map);
        if (bench->parsed())
            return run_table_command(bench_o, ambc::cmd_estimation_bench);
        if (validate->parsed())
        {
            ambc::ValidationOptions opt;
            opt.seed = v_seed;
            opt.mc_draws = v_draws;
            const auto results = ambc::run_validation(opt);
            const std::string report = ambc::render_validation_csv(results);
            std::cout << report;
            if (!v_output.empty())
            {
                std::ofstream out(v_output, std::ios::binary);
                out << report;
            }
            return ambc::all_passed(results) ? 0 : 2;
        }
    }
    catch (const ambc::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
