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

#include "ambc/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ambc/errors.hpp"
#include "ambc/rng.hpp"

namespace ambc
{
    namespace
    {
        // RNG stream-space partitioning (see rng.hpp).
        constexpr std::uint64_t stream_batch_h1 = 1ull << 62;
        constexpr std::uint64_t stream_preamble = 1ull << 63;

        struct Prepared
        {
            ChannelPair channels;
            CompositeChannel cc;
            double s_abs = 0.0;
            AmbientSpec ambient;
            double theta = 0.0;
            double v_t = 0.0;    // simplified receiver only
            MEigen me;           // optimum + perfect CSI only
            CVec g0_unit;        // simplified + perfect CSI fast path
        };

        Prepared prepare(const Scenario &sc)
        {
            if (sc.trials < 100)
                throw std::invalid_argument("Scenario: trials must be >= 100");
            if (sc.block_size < 1)
                throw std::invalid_argument("Scenario: block_size must be >= 1");
            if (sc.preamble_len < 1)
                throw std::invalid_argument("Scenario: preamble length must be >= 1");
            if (!(sc.pf_target > 0.0) || sc.pf_target > 1.0)
                throw std::invalid_argument("Scenario: pf_target must be in (0, 1]");

            const ArrayGeometry geom = build_array(sc.n_r, sc.spacing, sc.d0, sc.array_axis);
            const DistanceSet dist = path_distances(geom, sc.bd_pos);

            Prepared p;
            p.channels = friis_channels(dist);
            p.s_abs = snr_to_amplitude(sc.gamma_db, sc.d0);
            if (sc.unit_norm_channels)
            {
                NormalizedChannels nc = normalize_channels(p.channels);
                p.channels = nc.channels;
                p.s_abs *= nc.amplitude_scale;
            }
            p.cc = composite_channel(p.channels, sc.alphabet);
            p.ambient = sc.ambient;
            p.ambient.power = p.s_abs * p.s_abs;
            p.theta = noncentrality_theta(p.channels, sc.alphabet, p.s_abs * p.s_abs);

            if (sc.receiver == ReceiverKind::Optimum)
            {
                if (sc.csi == CsiMode::Perfect)
                    p.me = m_eigen(p.cc); // throws InseparableHypotheses when kappa = 0
            }
            else
            {
                p.v_t = threshold_for_pf(sc.pf_target, sc.n_r);
                p.g0_unit = p.cc.g0.normalized();
            }
            return p;
        }

        // Per-block detector state under any CSI mode.
        struct Detector
        {
            // optimum: compare |a0^H y|^2 and |a1^H y|^2 (vector route) or the
            // two quadratic forms y^H W y (InvCov route)
            CVec a0, a1;
            CMat w0, w1;
            bool quadratic = false;
            // simplified: z_s = |y|^2 - |a0^H y|^2 or y^H W0 y, against v_t
            double v_t = 0.0;

            bool decide_is_x1_optimum(const CVec &y, CVec &tmp) const
            {
                if (quadratic)
                {
                    tmp.noalias() = w0 * y;
                    const double q0 = y.dot(tmp).real();
                    tmp.noalias() = w1 * y;
                    const double q1 = y.dot(tmp).real();
                    return q0 > q1; // smaller beamformed-out energy wins
                }
                return std::norm(a0.dot(y)) < std::norm(a1.dot(y));
            }

            bool decide_is_x1_simplified(const CVec &y, CVec &tmp) const
            {
                double z_s;
                if (quadratic)
                {
                    tmp.noalias() = w0 * y;
                    z_s = y.dot(tmp).real();
                }
                else
                {
                    z_s = y.squaredNorm() - std::norm(a0.dot(y));
                }
                return z_s > v_t;
            }
        };

        Detector perfect_detector(const Scenario &sc, const Prepared &p)
        {
            Detector det;
            if (sc.receiver == ReceiverKind::Optimum)
            {
                det.a0 = p.me.u1;
                det.a1 = p.me.u2;
            }
            else
            {
                det.a0 = p.g0_unit;
                det.v_t = p.v_t;
            }
            return det;
        }

        // Draw one length-L preamble sample matrix under the fixed symbol x.
        CMat draw_preamble(const Scenario &sc, const Prepared &p, cplx x, Rng &rng)
        {
            CMat y_p(sc.n_r, sc.preamble_len);
            for (int l = 0; l < sc.preamble_len; ++l)
            {
                const cplx s = draw_ambient(p.ambient, rng);
                for (int a = 0; a < sc.n_r; ++a)
                {
                    cplx v = (p.channels.alpha[a] + x * p.channels.beta[a]) * s;
                    if (!sc.noiseless)
                        v += rng.complex_normal();
                    y_p(a, l) = v;
                }
            }
            return y_p;
        }

        BeamformerEstimate estimate(CsiMode mode, const CMat &y_p)
        {
            switch (mode)
            {
            case CsiMode::InvCov:
                return estimate_inv_cov(y_p);
            case CsiMode::Svd:
                return estimate_svd(y_p);
            case CsiMode::PowerIter:
                return estimate_power_iteration(y_p);
            case CsiMode::Perfect:
                break;
            }
            throw std::invalid_argument("estimate: not an estimation mode");
        }

        // Estimates the block detector from freshly drawn preambles; fills
        // *alignment_out with |g_hat^H g0| / |g0| when the method produces a
        // direction estimate (NaN otherwise).
        Detector block_detector(const Scenario &sc, const Prepared &p, std::int64_t block,
                                double *alignment_out)
        {
            Rng rng(sc.seed, stream_preamble | static_cast<std::uint64_t>(block));
            const CMat y_p0 = draw_preamble(sc, p, sc.alphabet.x0, rng);
            const BeamformerEstimate est0 = estimate(sc.csi, y_p0);

            Detector det;
            det.v_t = p.v_t;
            if (alignment_out != nullptr)
                *alignment_out = est0.g_hat.size() > 0 ? alignment(est0.g_hat, p.cc.g0)
                                                       : std::numeric_limits<double>::quiet_NaN();

            if (sc.receiver == ReceiverKind::Simplified)
            {
                if (sc.csi == CsiMode::InvCov)
                {
                    // R_p^{-1} has top eigenvalue < 1 while the ideal projector's
                    // passband eigenvalues equal 1; rescale so the Gamma-law
                    // threshold v_t applies.
                    Eigen::SelfAdjointEigenSolver<CMat> es(est0.g_matrix, Eigen::EigenvaluesOnly);
                    det.w0 = est0.g_matrix / es.eigenvalues().maxCoeff();
                    det.quadratic = true;
                }
                else
                {
                    det.a0 = est0.g_hat;
                }
                return det;
            }

            // optimum receiver consumes both preamble blocks
            const CMat y_p1 = draw_preamble(sc, p, sc.alphabet.x1, rng);
            const BeamformerEstimate est1 = estimate(sc.csi, y_p1);
            if (sc.csi == CsiMode::InvCov)
            {
                det.w0 = est0.g_matrix;
                det.w1 = est1.g_matrix;
                det.quadratic = true;
            }
            else
            {
                det.a0 = est0.g_hat;
                det.a1 = est1.g_hat;
            }
            return det;
        }

        // Runs data trials [t_begin, t_end) against a fixed detector.
        // fixed_x < 0 draws the BD symbol uniformly; 0/1 pins it (ROC batches).
        std::int64_t run_trials(const Scenario &sc, const Prepared &p, const Detector &det,
                                std::int64_t t_begin, std::int64_t t_end,
                                std::uint64_t stream_base, int fixed_x)
        {
            const bool optimum = sc.receiver == ReceiverKind::Optimum;
            CVec y(sc.n_r), tmp(sc.n_r);
            std::int64_t errors = 0;
            for (std::int64_t t = t_begin; t < t_end; ++t)
            {
                Rng rng(sc.seed, stream_base | static_cast<std::uint64_t>(t));
                const int bit = fixed_x >= 0 ? fixed_x : static_cast<int>(rng.bounded(2));
                const cplx x = bit == 0 ? sc.alphabet.x0 : sc.alphabet.x1;
                const cplx s = draw_ambient(p.ambient, rng);
                for (int a = 0; a < sc.n_r; ++a)
                {
                    y[a] = (p.channels.alpha[a] + x * p.channels.beta[a]) * s;
                    if (!sc.noiseless)
                        y[a] += rng.complex_normal();
                }
                const bool is_x1 = optimum ? det.decide_is_x1_optimum(y, tmp)
                                           : det.decide_is_x1_simplified(y, tmp);
                errors += (is_x1 != (bit == 1)) ? 1 : 0;
            }
            return errors;
        }

        int worker_count(const Scenario &sc, std::int64_t work_items)
        {
            int n = sc.threads > 0 ? sc.threads : static_cast<int>(std::thread::hardware_concurrency());
            if (n < 1)
                n = 1;
            if (work_items < 4096)
                n = 1;
            return static_cast<int>(std::min<std::int64_t>(n, std::max<std::int64_t>(1, work_items)));
        }

        // Static partition of [0, total) into contiguous chunks; the reduction
        // is a plain integer sum, so the result cannot depend on scheduling.
        template <typename Fn>
        std::int64_t parallel_sum(int workers, std::int64_t total, Fn &&chunk_fn)
        {
            if (workers <= 1)
                return chunk_fn(static_cast<std::int64_t>(0), total);
            std::vector<std::int64_t> partial(static_cast<std::size_t>(workers), 0);
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            const std::int64_t step = (total + workers - 1) / workers;
            for (int w = 0; w < workers; ++w)
            {
                const std::int64_t lo = std::min<std::int64_t>(total, w * step);
                const std::int64_t hi = std::min<std::int64_t>(total, lo + step);
                pool.emplace_back([&, w, lo, hi]
                                  { partial[static_cast<std::size_t>(w)] = chunk_fn(lo, hi); });
            }
            for (auto &th : pool)
                th.join();
            return std::accumulate(partial.begin(), partial.end(), static_cast<std::int64_t>(0));
        }
    }

    std::string to_string(CsiMode m)
    {
        switch (m)
        {
        case CsiMode::Perfect:
            return "perfect";
        case CsiMode::InvCov:
            return "invcov";
        case CsiMode::Svd:
            return "svd";
        case CsiMode::PowerIter:
            return "poweriter";
        }
        return "?";
    }

    std::string to_string(ReceiverKind r)
    {
        return r == ReceiverKind::Optimum ? "optimum" : "simplified";
    }

    std::string to_string(AmbientSpec::Kind k)
    {
        switch (k)
        {
        case AmbientSpec::Kind::ConstantModulus:
            return "qpsk";
        case AmbientSpec::Kind::Qam16:
            return "qam16";
        case AmbientSpec::Kind::Gaussian:
            return "gaussian";
        }
        return "?";
    }

    double wilson_halfwidth(std::int64_t err_count, std::int64_t trials)
    {
        const double z = 1.959963984540054;
        const double n = static_cast<double>(trials);
        const double p = static_cast<double>(err_count) / n;
        const double z2n = z * z / n;
        return (z / (1.0 + z2n)) * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
    }

    namespace detail_sim
    {
        RunResult run_ber_collect(const Scenario &sc, std::vector<double> *alignments)
        {
            const auto t0 = std::chrono::steady_clock::now();
            const Prepared p = prepare(sc);

            std::int64_t errors = 0;
            if (sc.csi == CsiMode::Perfect)
            {
                const Detector det = perfect_detector(sc, p);
                const int workers = worker_count(sc, sc.trials);
                errors = parallel_sum(workers, sc.trials,
                                      [&](std::int64_t lo, std::int64_t hi)
                                      { return run_trials(sc, p, det, lo, hi, 0, -1); });
            }
            else
            {
                const std::int64_t n_blocks = (sc.trials + sc.block_size - 1) / sc.block_size;
                if (alignments != nullptr)
                    alignments->assign(static_cast<std::size_t>(n_blocks), 0.0);
                const int workers = worker_count(sc, n_blocks);
                errors = parallel_sum(workers, n_blocks,
                                      [&](std::int64_t b_lo, std::int64_t b_hi)
                                      {
                                          std::int64_t errs = 0;
                                          for (std::int64_t b = b_lo; b < b_hi; ++b)
                                          {
                                              double align = 0.0;
                                              const Detector det = block_detector(sc, p, b, &align);
                                              if (alignments != nullptr)
                                                  (*alignments)[static_cast<std::size_t>(b)] = align;
                                              const std::int64_t lo = b * sc.block_size;
                                              const std::int64_t hi = std::min<std::int64_t>(sc.trials, lo + sc.block_size);
                                              errs += run_trials(sc, p, det, lo, hi, 0, -1);
                                          }
                                          return errs;
                                      });
            }

            RunResult r;
            r.err_count = errors;
            r.trials = sc.trials;
            r.ber = static_cast<double>(errors) / static_cast<double>(sc.trials);
            r.ci95 = wilson_halfwidth(errors, sc.trials);
            r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            r.scenario = sc;
            return r;
        }
    }

    RunResult run_ber(const Scenario &scenario)
    {
        return detail_sim::run_ber_collect(scenario, nullptr);
    }

    std::vector<RocPoint> run_roc(const Scenario &scenario, const std::vector<double> &pf_grid)
    {
        if (scenario.receiver != ReceiverKind::Simplified)
            throw std::invalid_argument("run_roc: ROC sampling applies to the simplified receiver");
        if (scenario.csi != CsiMode::Perfect)
            throw std::invalid_argument("run_roc: only perfect-CSI ROC sampling is supported");
        if (pf_grid.empty())
            throw std::invalid_argument("run_roc: empty pf grid");
        for (double pf : pf_grid)
            if (!(pf > 0.0) || pf > 1.0)
                throw std::invalid_argument("run_roc: pf targets must be in (0, 1]");

        const Prepared p = prepare(scenario);
        const CVec g0_unit = p.cc.g0.normalized();

        // One pass per hypothesis: collect the exceedance count per threshold.
        std::vector<double> thresholds(pf_grid.size());
        for (std::size_t i = 0; i < pf_grid.size(); ++i)
            thresholds[i] = threshold_for_pf(pf_grid[i], scenario.n_r);

        const auto count_exceedances = [&](int fixed_bit, std::uint64_t stream_base)
        {
            std::vector<std::int64_t> counts(thresholds.size(), 0);
            const int workers = worker_count(scenario, scenario.trials);
            std::vector<std::vector<std::int64_t>> partial(
                static_cast<std::size_t>(workers), std::vector<std::int64_t>(thresholds.size(), 0));
            std::vector<std::thread> pool;
            const std::int64_t step = (scenario.trials + workers - 1) / workers;
            for (int w = 0; w < workers; ++w)
            {
                const std::int64_t lo = std::min<std::int64_t>(scenario.trials, w * step);
                const std::int64_t hi = std::min<std::int64_t>(scenario.trials, lo + step);
                pool.emplace_back([&, w, lo, hi]
                                  {
                    CVec y(scenario.n_r);
                    auto &mine = partial[static_cast<std::size_t>(w)];
                    const cplx x = fixed_bit == 0 ? scenario.alphabet.x0 : scenario.alphabet.x1;
                    for (std::int64_t t = lo; t < hi; ++t)
                    {
                        Rng rng(scenario.seed, stream_base | static_cast<std::uint64_t>(t));
                        const cplx s = draw_ambient(p.ambient, rng);
                        for (int a = 0; a < scenario.n_r; ++a)
                        {
                            y[a] = (p.channels.alpha[a] + x * p.channels.beta[a]) * s;
                            if (!scenario.noiseless)
                                y[a] += rng.complex_normal();
                        }
                        const double z_s = y.squaredNorm() - std::norm(g0_unit.dot(y));
                        for (std::size_t i = 0; i < thresholds.size(); ++i)
                            mine[i] += (z_s > thresholds[i]) ? 1 : 0;
                    } });
            }
            for (auto &th : pool)
                th.join();
            for (const auto &part : partial)
                for (std::size_t i = 0; i < counts.size(); ++i)
                    counts[i] += part[i];
            return counts;
        };

        const std::vector<std::int64_t> h0_counts = count_exceedances(0, 0);
        const std::vector<std::int64_t> h1_counts = count_exceedances(1, stream_batch_h1);

        std::vector<RocPoint> out(pf_grid.size());
        for (std::size_t i = 0; i < pf_grid.size(); ++i)
        {
            out[i].pf_target = pf_grid[i];
            out[i].v_t = thresholds[i];
            out[i].pf_emp = static_cast<double>(h0_counts[i]) / static_cast<double>(scenario.trials);
            out[i].pd_emp = static_cast<double>(h1_counts[i]) / static_cast<double>(scenario.trials);
            out[i].pd_analytic = simplified_pd(p.theta, scenario.n_r, pf_grid[i]);
        }
        return out;
    }

    std::vector<EstimationBenchRow> run_estimation_bench(const Scenario &scenario,
                                                         const std::vector<int> &l_values,
                                                         const std::vector<CsiMode> &methods)
    {
        if (l_values.empty() || methods.empty())
            throw std::invalid_argument("run_estimation_bench: empty L or method axis");

        std::vector<EstimationBenchRow> rows;
        rows.reserve(l_values.size() * methods.size());
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (int l : l_values)
        {
            for (CsiMode m : methods)
            {
                EstimationBenchRow row;
                row.preamble_len = l;
                row.method = m;
                Scenario sc = scenario;
                sc.preamble_len = l;
                sc.csi = m;
                if (m == CsiMode::InvCov && l < scenario.n_r)
                {
                    row.not_enough_samples = true;
                    row.align_mean = row.align_median = row.align_min = nan;
                    rows.push_back(row);
                    continue;
                }
                std::vector<double> aligns;
                row.result = detail_sim::run_ber_collect(sc, &aligns);
                aligns.erase(std::remove_if(aligns.begin(), aligns.end(),
                                            [](double a) { return std::isnan(a); }),
                             aligns.end());
                if (aligns.empty())
                {
                    row.align_mean = row.align_median = row.align_min = nan;
                }
                else
                {
                    std::sort(aligns.begin(), aligns.end());
                    row.align_min = aligns.front();
                    row.align_median = aligns[aligns.size() / 2];
                    row.align_mean = std::accumulate(aligns.begin(), aligns.end(), 0.0) /
                                     static_cast<double>(aligns.size());
                }
                rows.push_back(row);
            }
        }
        return rows;
    }

    McDncfOracle::McDncfOracle(const DncfParams &params, std::int64_t draws, std::uint64_t seed)
    {
        if (draws < 100000)
            throw std::invalid_argument("McDncfOracle: need at least 1e5 draws");
        const double m1 = std::sqrt(params.mu1);
        const double m2 = std::sqrt(params.mu2);
        samples_.resize(static_cast<std::size_t>(draws));
        for (std::int64_t i = 0; i < draws; ++i)
        {
            Rng rng(seed, static_cast<std::uint64_t>(i));
            const double t = std::norm(m1 + rng.complex_normal());
            const double r = std::norm(m2 + rng.complex_normal());
            samples_[static_cast<std::size_t>(i)] = t / r;
        }
        std::sort(samples_.begin(), samples_.end());
    }

    double McDncfOracle::cdf(double zeta) const
    {
        const auto it = std::upper_bound(samples_.begin(), samples_.end(), zeta);
        return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
    }

    double McDncfOracle::kolmogorov_upper_bound(const std::function<double(double)> &reference_cdf,
                                                std::size_t grid) const
    {
        const std::size_t n = samples_.size();
        grid = std::min(grid, n);
        // Grid of sample indices; between consecutive grid points the empirical
        // CDF moves by at most the index gap and the reference CDF by its own
        // increment, both of which bound the in-between deviation.
        double bound = 0.0;
        double prev_f = 0.0;
        double prev_emp = 0.0;
        for (std::size_t k = 0; k < grid; ++k)
        {
            const std::size_t idx = ((k + 1) * n) / grid - 1;
            const double f = reference_cdf(samples_[idx]);
            const double emp_before = static_cast<double>(idx) / static_cast<double>(n);
            const double emp_after = static_cast<double>(idx + 1) / static_cast<double>(n);
            // deviation inside (previous grid point, this one]
            const double lo_dev = std::max(std::fabs(prev_emp - prev_f), std::fabs(emp_before - f));
            const double in_between = std::max(std::fabs(emp_before - prev_f), std::fabs(prev_emp - f));
            bound = std::max({bound, lo_dev, in_between, std::fabs(emp_after - f)});
            prev_f = f;
            prev_emp = emp_after;
        }
        bound = std::max(bound, std::fabs(1.0 - prev_f));
        return bound;
    }
}
