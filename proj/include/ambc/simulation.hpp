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

#ifndef AMBC_SIMULATION_HPP
#define AMBC_SIMULATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ambc/analytics.hpp"
#include "ambc/estimation.hpp"
#include "ambc/types.hpp"

namespace ambc
{
    enum class CsiMode
    {
        Perfect,
        InvCov,
        Svd,
        PowerIter
    };

    enum class ReceiverKind
    {
        Optimum,
        Simplified
    };

    std::string to_string(CsiMode m);
    std::string to_string(ReceiverKind r);
    std::string to_string(AmbientSpec::Kind k);

    // One fully specified experiment. Trials use per-trial RNG streams keyed
    // by (seed, trial index), so results are reproducible and independent of
    // the worker count. With an estimated-CSI mode, trials are grouped into
    // coherence blocks of block_size data symbols; every block re-draws its
    // preambles (one length-L block per BD symbol for the optimum receiver,
    // the x0 block only for the simplified receiver) and re-estimates the
    // beamformers. Preamble symbols never enter the BER accounting.
    struct Scenario
    {
        int n_r = 16;
        double spacing = 0.5;
        double d0 = 80.0;
        ArrayAxis array_axis = ArrayAxis::Y;
        Vec2 bd_pos{40.0 - 2.8284271247461903, 2.8284271247461903}; // d1 = 4
        BdAlphabet alphabet = bpsk();
        AmbientSpec ambient{};
        double gamma_db = 28.0;
        int preamble_len = 30;
        CsiMode csi = CsiMode::Perfect;
        ReceiverKind receiver = ReceiverKind::Optimum;
        double pf_target = 0.01;
        std::uint64_t seed = 1;
        std::int64_t trials = 100000;
        std::int64_t block_size = 1000;
        int threads = 0;                 // 0 = hardware concurrency
        bool noiseless = false;          // test hook: suppress receiver noise
        bool unit_norm_channels = false; // rescale (alpha, beta) by 1/|alpha|, |s| by |alpha|
    };

    struct RunResult
    {
        double ber = 0.0;
        std::int64_t err_count = 0;
        std::int64_t trials = 0;
        double ci95 = 0.0; // Wilson 95% half-width
        double wall_time_s = 0.0;
        Scenario scenario;
    };

    // Equal-probability BD symbols, fresh ambient symbol and noise per trial.
    RunResult run_ber(const Scenario &scenario);

    struct RocPoint
    {
        double pf_target = 0.0;
        double v_t = 0.0;
        double pf_emp = 0.0;
        double pd_emp = 0.0;
        double pd_analytic = 0.0;
    };

    // Simplified receiver with perfect CSI: one H0-only and one H1-only batch
    // of scenario.trials samples, thresholded at every pf target.
    std::vector<RocPoint> run_roc(const Scenario &scenario, const std::vector<double> &pf_grid);

    struct EstimationBenchRow
    {
        int preamble_len = 0;
        CsiMode method = CsiMode::Svd;
        RunResult result;
        double align_mean = 0.0;   // NaN when the method has no g_hat
        double align_median = 0.0; // NaN likewise
        double align_min = 0.0;
        bool not_enough_samples = false; // InvCov with L < n_r
    };

    std::vector<EstimationBenchRow> run_estimation_bench(const Scenario &scenario,
                                                         const std::vector<int> &l_values,
                                                         const std::vector<CsiMode> &methods);

    // Empirical CDF of zeta = t / r with t = |CN(sqrt(mu1), 1)|^2 and
    // r = |CN(sqrt(mu2), 1)|^2: the brute-force oracle for dncf_cdf.
    class McDncfOracle
    {
    public:
        McDncfOracle(const DncfParams &params, std::int64_t draws, std::uint64_t seed);

        double cdf(double zeta) const;
        const std::vector<double> &samples() const { return samples_; }

        // Rigorous upper bound on sup_z |empirical - reference| evaluated on a
        // quantile grid (the in-between variation of both CDFs is accounted
        // for, so the bound is conservative).
        double kolmogorov_upper_bound(const std::function<double(double)> &reference_cdf,
                                      std::size_t grid = 16384) const;

    private:
        std::vector<double> samples_; // sorted ratios
    };

    double wilson_halfwidth(std::int64_t err_count, std::int64_t trials);
}

#endif
