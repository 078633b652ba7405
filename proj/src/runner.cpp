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

#include "ambc/runner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "ambc/errors.hpp"

namespace ambc
{
    namespace
    {
        Scenario stamped(const ExperimentConfig &cfg, const Scenario &base)
        {
            Scenario sc = base;
            sc.seed = cfg.run.seed;
            sc.trials = cfg.run.trials;
            sc.block_size = cfg.run.block_size;
            sc.threads = cfg.run.threads;
            return sc;
        }

        const ScenarioBlock &single_block(const ExperimentConfig &cfg, const char *cmd)
        {
            if (cfg.scenarios.size() != 1)
                throw ConfigError(0, std::string(cmd) + " needs exactly one [scenario] block, got " +
                                         std::to_string(cfg.scenarios.size()));
            return cfg.scenarios.front();
        }

        // Closed-form error probability when one exists for the scenario;
        // empty string otherwise (QAM-16 ambient, estimated CSI, or a series
        // budget overflow).
        std::string analytic_pe_cell(const Scenario &sc)
        {
            try
            {
                const ArrayGeometry geom = build_array(sc.n_r, sc.spacing, sc.d0, sc.array_axis);
                const ChannelPair ch = friis_channels(path_distances(geom, sc.bd_pos));
                const double s_abs = snr_to_amplitude(sc.gamma_db, sc.d0);
                const double s2 = s_abs * s_abs;
                if (sc.receiver == ReceiverKind::Optimum)
                {
                    if (sc.csi != CsiMode::Perfect)
                        return "";
                    const CompositeChannel cc = composite_channel(ch, sc.alphabet);
                    if (sc.ambient.kind == AmbientSpec::Kind::ConstantModulus)
                        return format_sig12(optimum_pe_constant(cc, m_eigen(cc), s2));
                    if (sc.ambient.kind == AmbientSpec::Kind::Gaussian)
                    {
                        const auto [p0, p1] = al_params(cc, s2);
                        return format_sig12(optimum_pe_gaussian(p0, p1));
                    }
                    return "";
                }
                // simplified receiver: Neyman-Pearson analysis assumes a
                // deterministic ambient amplitude
                if (sc.ambient.kind != AmbientSpec::Kind::ConstantModulus)
                    return "";
                const double theta = noncentrality_theta(ch, sc.alphabet, s2);
                const double pd = simplified_pd(theta, sc.n_r, sc.pf_target);
                return format_sig12(simplified_pe(sc.pf_target, pd));
            }
            catch (const std::exception &)
            {
                return "";
            }
        }
    }

    Table cmd_ber_sweep(const ExperimentConfig &cfg)
    {
        if (cfg.gamma_axis.empty())
            throw ConfigError(0, "ber-sweep needs a nonempty [sweep] gamma_db axis");

        struct RowData
        {
            std::string receiver, modulation, ambient, csi;
            double gamma = 0.0;
            std::size_t block_idx = 0;
            std::vector<std::string> cells;
        };
        std::vector<RowData> rows;

        for (std::size_t bi = 0; bi < cfg.scenarios.size(); ++bi)
        {
            for (double gamma : cfg.gamma_axis)
            {
                Scenario sc = stamped(cfg, cfg.scenarios[bi].scenario);
                sc.gamma_db = gamma;

                RowData rd;
                rd.receiver = to_string(sc.receiver);
                rd.modulation = modulation_name(sc.alphabet);
                rd.ambient = to_string(sc.ambient.kind);
                rd.csi = to_string(sc.csi);
                rd.gamma = gamma;
                rd.block_idx = bi;

                std::string err;
                RunResult rr;
                try
                {
                    rr = run_ber(sc);
                }
                catch (const std::exception &e)
                {
                    err = e.what();
                }
                if (err.empty())
                {
                    rd.cells = {format_sig12(gamma), rd.receiver, rd.modulation, rd.ambient, rd.csi,
                                format_sig12(rr.ber), format_sig12(rr.ci95),
                                std::to_string(rr.err_count), std::to_string(rr.trials),
                                analytic_pe_cell(sc), ""};
                }
                else
                {
                    std::replace(err.begin(), err.end(), ',', ';');
                    rd.cells = {format_sig12(gamma), rd.receiver, rd.modulation, rd.ambient, rd.csi,
                                "", "", "", "", "", err};
                }
                rows.push_back(std::move(rd));
            }
        }

        std::stable_sort(rows.begin(), rows.end(), [](const RowData &a, const RowData &b)
                         { return std::tie(a.receiver, a.gamma, a.modulation, a.ambient, a.csi, a.block_idx) <
                                  std::tie(b.receiver, b.gamma, b.modulation, b.ambient, b.csi, b.block_idx); });

        Table t;
        t.header = {"gamma_db", "receiver", "modulation", "ambient", "csi",
                    "ber", "ci95", "err_count", "trials", "analytic_pe", "error"};
        for (auto &rd : rows)
            t.rows.push_back(std::move(rd.cells));
        return t;
    }

    Table cmd_roc(const ExperimentConfig &cfg)
    {
        if (cfg.pf_grid.empty())
            throw ConfigError(0, "roc needs a nonempty [sweep] pf grid");
        const ScenarioBlock &blk = single_block(cfg, "roc");
        std::vector<int> n_r_list = cfg.n_r_list;
        if (n_r_list.empty())
            n_r_list = {blk.scenario.n_r};

        Table t;
        t.header = {"n_r", "pf_target", "v_t", "pf_emp", "pd_emp", "pd_analytic"};
        for (int n_r : n_r_list)
        {
            Scenario sc = stamped(cfg, blk.scenario);
            sc.n_r = n_r;
            sc.receiver = ReceiverKind::Simplified;
            for (const RocPoint &pt : run_roc(sc, cfg.pf_grid))
                t.rows.push_back({std::to_string(n_r), format_sig12(pt.pf_target),
                                  format_sig12(pt.v_t), format_sig12(pt.pf_emp),
                                  format_sig12(pt.pd_emp), format_sig12(pt.pd_analytic)});
        }
        return t;
    }

    Table cmd_theta_map(const ExperimentConfig &cfg)
    {
        if (!cfg.has_grid)
            throw ConfigError(0, "theta-map needs a [grid] section");
        const ScenarioBlock &blk = single_block(cfg, "theta-map");
        const Scenario &sc = blk.scenario;
        const ArrayGeometry geom = build_array(sc.n_r, sc.spacing, sc.d0, sc.array_axis);
        const ThetaMapResult map = theta_map(geom, sc.alphabet, sc.gamma_db, cfg.grid);

        Table t;
        t.header = {"x", "y", "theta_db"};
        for (std::size_t i = 0; i < map.theta_db.size(); ++i)
            t.rows.push_back({format_sig12(map.x[i]), format_sig12(map.y[i]),
                              format_sig12(map.theta_db[i])});
        return t;
    }

    Table cmd_estimation_bench(const ExperimentConfig &cfg)
    {
        if (cfg.l_list.empty())
            throw ConfigError(0, "estimation-bench needs a nonempty [sweep] l axis");
        if (cfg.method_list.empty())
            throw ConfigError(0, "estimation-bench needs a nonempty [sweep] methods axis");
        const ScenarioBlock &blk = single_block(cfg, "estimation-bench");

        const Scenario sc = stamped(cfg, blk.scenario);
        const auto rows = run_estimation_bench(sc, cfg.l_list, cfg.method_list);

        Table t;
        t.header = {"l", "method", "ber", "ci95", "err_count", "trials",
                    "align_mean", "align_median", "align_min", "note"};
        for (const auto &row : rows)
        {
            if (row.not_enough_samples)
            {
                t.rows.push_back({std::to_string(row.preamble_len), to_string(row.method),
                                  "", "", "", "", "", "", "", "not-enough-samples"});
                continue;
            }
            t.rows.push_back({std::to_string(row.preamble_len), to_string(row.method),
                              format_sig12(row.result.ber), format_sig12(row.result.ci95),
                              std::to_string(row.result.err_count), std::to_string(row.result.trials),
                              format_sig12(row.align_mean), format_sig12(row.align_median),
                              format_sig12(row.align_min), ""});
        }
        return t;
    }
}
