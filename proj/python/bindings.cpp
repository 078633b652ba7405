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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ambc/analytics.hpp"
#include "ambc/config.hpp"
#include "ambc/detector.hpp"
#include "ambc/estimation.hpp"
#include "ambc/geometry.hpp"
#include "ambc/rng.hpp"
#include "ambc/runner.hpp"
#include "ambc/signal.hpp"
#include "ambc/simulation.hpp"
#include "ambc/special_functions.hpp"
#include "ambc/validation.hpp"

namespace py = pybind11;
using namespace ambc;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Optimum and simplified multi-antenna receivers for binary-modulated "
              "ambient backscatter signals: channels, detectors, closed-form error "
              "probabilities, and seeded Monte-Carlo experiments.";

    // ---- geometry -------------------------------------------------------
    py::enum_<ArrayAxis>(m, "ArrayAxis")
        .value("Y", ArrayAxis::Y)
        .value("X", ArrayAxis::X);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def_readonly("n_r", &ArrayGeometry::n_r)
        .def_readonly("spacing", &ArrayGeometry::spacing)
        .def_readonly("ref_index", &ArrayGeometry::ref_index)
        .def_readonly("axis", &ArrayGeometry::axis)
        .def_readonly("tx_pos", &ArrayGeometry::tx_pos)
        .def_readonly("antenna_pos", &ArrayGeometry::antenna_pos);

    py::class_<DistanceSet>(m, "DistanceSet")
        .def_readonly("d0l", &DistanceSet::d0l)
        .def_readonly("d1l", &DistanceSet::d1l)
        .def_readonly("d2", &DistanceSet::d2)
        .def_readonly("d0", &DistanceSet::d0)
        .def_readonly("d1", &DistanceSet::d1);

    py::class_<ChannelPair>(m, "ChannelPair")
        .def(py::init([](const CVec &alpha, const CVec &beta)
                      { return ChannelPair{alpha, beta}; }),
             py::arg("alpha"), py::arg("beta"))
        .def_readwrite("alpha", &ChannelPair::alpha)
        .def_readwrite("beta", &ChannelPair::beta);

    m.def("build_array", &build_array, py::arg("n_r"), py::arg("spacing"), py::arg("d0"),
          py::arg("axis") = ArrayAxis::Y);
    m.def("path_distances", &path_distances, py::arg("geometry"), py::arg("bd_pos"));
    m.def("friis_channels", &friis_channels, py::arg("distances"));
    m.def("power_ratio_delta_db", &power_ratio_delta_db, py::arg("channels"));
    m.def("reference_only", &reference_only, py::arg("distances"));

    // ---- signal ----------------------------------------------------------
    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
        .def("uniform", &Rng::uniform)
        .def("normal", &Rng::normal)
        .def("complex_normal", &Rng::complex_normal);

    py::enum_<AmbientSpec::Kind>(m, "AmbientKind")
        .value("ConstantModulus", AmbientSpec::Kind::ConstantModulus)
        .value("Qam16", AmbientSpec::Kind::Qam16)
        .value("Gaussian", AmbientSpec::Kind::Gaussian);

    py::class_<AmbientSpec>(m, "AmbientSpec")
        .def(py::init<>())
        .def_readwrite("kind", &AmbientSpec::kind)
        .def_readwrite("psk_order", &AmbientSpec::psk_order)
        .def_readwrite("power", &AmbientSpec::power);

    py::class_<BdAlphabet>(m, "BdAlphabet")
        .def(py::init<>())
        .def(py::init([](cplx x0, cplx x1)
                      { return BdAlphabet{x0, x1}; }),
             py::arg("x0"), py::arg("x1"))
        .def_readwrite("x0", &BdAlphabet::x0)
        .def_readwrite("x1", &BdAlphabet::x1);

    m.def("ook", &ook);
    m.def("bpsk", &bpsk);
    m.def("snr_to_amplitude", &snr_to_amplitude, py::arg("gamma_db"), py::arg("d0"));
    m.def("draw_ambient", &draw_ambient, py::arg("spec"), py::arg("rng"));
    m.def("make_preambles", &make_preambles, py::arg("preamble_len"), py::arg("alphabet"),
          py::arg("dual") = true);

    py::class_<RxSample>(m, "RxSample")
        .def_readonly("y", &RxSample::y)
        .def_readonly("truth_x", &RxSample::truth_x)
        .def_readonly("truth_s", &RxSample::truth_s);
    m.def("received_sample", &received_sample, py::arg("channels"), py::arg("s"), py::arg("x"),
          py::arg("rng"), py::arg("with_noise") = true);

    // ---- detector --------------------------------------------------------
    py::class_<CompositeChannel>(m, "CompositeChannel")
        .def(py::init([](const CVec &g0, const CVec &g1)
                      { return CompositeChannel{g0, g1}; }),
             py::arg("g0"), py::arg("g1"))
        .def_readwrite("g0", &CompositeChannel::g0)
        .def_readwrite("g1", &CompositeChannel::g1);

    py::class_<Projector>(m, "Projector")
        .def_readonly("matrix", &Projector::matrix);

    py::class_<MEigen>(m, "MEigen")
        .def_readonly("kappa", &MEigen::kappa)
        .def_readonly("u1", &MEigen::u1)
        .def_readonly("u2", &MEigen::u2);

    py::class_<ZStat>(m, "ZStat")
        .def_readonly("z", &ZStat::z)
        .def_readonly("zeta", &ZStat::zeta);

    py::enum_<Hypothesis>(m, "Hypothesis")
        .value("H0", Hypothesis::H0)
        .value("H1", Hypothesis::H1);

    m.def("composite_channel", &composite_channel, py::arg("channels"), py::arg("alphabet"));
    m.def("projector", &projector, py::arg("g"));
    m.def("m_eigen", &m_eigen, py::arg("cc"));
    m.def("decision_matrix", &decision_matrix, py::arg("cc"));
    m.def("log_likelihood", &log_likelihood, py::arg("y"), py::arg("beamformer"));
    m.def("test_statistic_z", &test_statistic_z, py::arg("y"), py::arg("me"));
    m.def("optimum_decide", &optimum_decide, py::arg("y"), py::arg("me"), py::arg("alphabet"));
    m.def("simplified_statistic", &simplified_statistic, py::arg("y"), py::arg("g0_beamformer"));
    m.def("simplified_decide", &simplified_decide, py::arg("z_s"), py::arg("v_t"));
    m.def("ml_ambient_estimate", &ml_ambient_estimate, py::arg("y"), py::arg("g"));

    // ---- estimation ------------------------------------------------------
    py::enum_<EstimatorMethod>(m, "EstimatorMethod")
        .value("InvCov", EstimatorMethod::InvCov)
        .value("Svd", EstimatorMethod::Svd)
        .value("PowerIter", EstimatorMethod::PowerIter);

    py::class_<BeamformerEstimate>(m, "BeamformerEstimate")
        .def_readonly("method", &BeamformerEstimate::method)
        .def_readonly("g_hat", &BeamformerEstimate::g_hat)
        .def_readonly("g_matrix", &BeamformerEstimate::g_matrix);

    m.def("sample_covariance", &sample_covariance, py::arg("y_p"));
    m.def("estimate_inv_cov", &estimate_inv_cov, py::arg("y_p"));
    m.def("estimate_svd", &estimate_svd, py::arg("y_p"));
    m.def("estimate_power_iteration", &estimate_power_iteration, py::arg("y_p"),
          py::arg("tol") = 1e-8, py::arg("max_iter") = 50);
    m.def("alignment", &alignment, py::arg("g_hat"), py::arg("g"));

    // ---- special functions (Probability unwrapped to float) ---------------
    m.def("regularized_upper_gamma", [](double a, double x)
          { return static_cast<double>(regularized_upper_gamma(a, x)); },
          py::arg("a"), py::arg("x"));
    m.def("inv_regularized_upper_gamma", &inv_regularized_upper_gamma, py::arg("a"), py::arg("p"));
    m.def("marcum_q", [](int order, double a, double b)
          { return static_cast<double>(marcum_q(order, a, b)); },
          py::arg("m"), py::arg("a"), py::arg("b"));
    m.def("log_bessel_i", &log_bessel_i, py::arg("v"), py::arg("x"));
    m.def("regularized_incomplete_beta", [](double x, double a, double b)
          { return static_cast<double>(regularized_incomplete_beta(x, a, b)); },
          py::arg("x"), py::arg("a"), py::arg("b"));
    m.def("log_beta", &log_beta, py::arg("a"), py::arg("b"));

    // ---- analytics ---------------------------------------------------------
    py::class_<DncfParams>(m, "DncfParams")
        .def(py::init([](double mu1, double mu2)
                      { return DncfParams{mu1, mu2}; }),
             py::arg("mu1"), py::arg("mu2"))
        .def_readwrite("mu1", &DncfParams::mu1)
        .def_readwrite("mu2", &DncfParams::mu2);

    py::class_<AlParams>(m, "AlParams")
        .def(py::init([](double l1, double l2)
                      { return AlParams{l1, l2}; }),
             py::arg("lambda1"), py::arg("lambda2"))
        .def_readwrite("lambda1", &AlParams::lambda1)
        .def_readwrite("lambda2", &AlParams::lambda2);

    m.def("dncf_params", &dncf_params, py::arg("me"), py::arg("g"), py::arg("s_abs2"));
    m.def("dncf_cdf", [](double zeta, const DncfParams &p, double tol)
          { return static_cast<double>(dncf_cdf(zeta, p, tol)); },
          py::arg("zeta"), py::arg("params"), py::arg("tol") = 1e-10);
    m.def("optimum_pe_constant", [](const CompositeChannel &cc, const MEigen &me, double s2, double tol)
          { return static_cast<double>(optimum_pe_constant(cc, me, s2, tol)); },
          py::arg("cc"), py::arg("me"), py::arg("s_abs2"), py::arg("tol") = 1e-10);
    m.def("al_params", &al_params, py::arg("cc"), py::arg("sigma_s2"));
    m.def("al_cdf", [](double zeta, const AlParams &p)
          { return static_cast<double>(al_cdf(zeta, p)); },
          py::arg("zeta"), py::arg("params"));
    m.def("al_quantile", &al_quantile, py::arg("p"), py::arg("params"));
    m.def("optimum_pe_gaussian", [](const AlParams &p0, const AlParams &p1)
          { return static_cast<double>(optimum_pe_gaussian(p0, p1)); },
          py::arg("params_x0"), py::arg("params_x1"));
    m.def("noncentrality_theta", &noncentrality_theta, py::arg("channels"), py::arg("alphabet"),
          py::arg("s_abs2"));
    m.def("simplified_pf", [](double v_t, int n_r)
          { return static_cast<double>(simplified_pf(v_t, n_r)); },
          py::arg("v_t"), py::arg("n_r"));
    m.def("threshold_for_pf", &threshold_for_pf, py::arg("pf"), py::arg("n_r"));
    m.def("simplified_pd", [](double theta, int n_r, double pf)
          { return static_cast<double>(simplified_pd(theta, n_r, pf)); },
          py::arg("theta"), py::arg("n_r"), py::arg("pf"));
    m.def("simplified_pe", [](double pf, double pd)
          { return static_cast<double>(simplified_pe(pf, pd)); },
          py::arg("pf"), py::arg("pd"));

    py::class_<ThetaMapGrid>(m, "ThetaMapGrid")
        .def(py::init<>())
        .def_readwrite("x_min", &ThetaMapGrid::x_min)
        .def_readwrite("x_max", &ThetaMapGrid::x_max)
        .def_readwrite("y_min", &ThetaMapGrid::y_min)
        .def_readwrite("y_max", &ThetaMapGrid::y_max)
        .def_readwrite("nx", &ThetaMapGrid::nx)
        .def_readwrite("ny", &ThetaMapGrid::ny);

    py::class_<ThetaMapResult>(m, "ThetaMapResult")
        .def_readonly("nx", &ThetaMapResult::nx)
        .def_readonly("ny", &ThetaMapResult::ny)
        .def_readonly("x", &ThetaMapResult::x)
        .def_readonly("y", &ThetaMapResult::y)
        .def_readonly("theta_db", &ThetaMapResult::theta_db);
    m.def("theta_map", &theta_map, py::arg("geometry"), py::arg("alphabet"),
          py::arg("gamma_db"), py::arg("grid"));

    // ---- simulation --------------------------------------------------------
    py::enum_<CsiMode>(m, "CsiMode")
        .value("Perfect", CsiMode::Perfect)
        .value("InvCov", CsiMode::InvCov)
        .value("Svd", CsiMode::Svd)
        .value("PowerIter", CsiMode::PowerIter);

    py::enum_<ReceiverKind>(m, "ReceiverKind")
        .value("Optimum", ReceiverKind::Optimum)
        .value("Simplified", ReceiverKind::Simplified);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("n_r", &Scenario::n_r)
        .def_readwrite("spacing", &Scenario::spacing)
        .def_readwrite("d0", &Scenario::d0)
        .def_readwrite("array_axis", &Scenario::array_axis)
        .def_readwrite("bd_pos", &Scenario::bd_pos)
        .def_readwrite("alphabet", &Scenario::alphabet)
        .def_readwrite("ambient", &Scenario::ambient)
        .def_readwrite("gamma_db", &Scenario::gamma_db)
        .def_readwrite("preamble_len", &Scenario::preamble_len)
        .def_readwrite("csi", &Scenario::csi)
        .def_readwrite("receiver", &Scenario::receiver)
        .def_readwrite("pf_target", &Scenario::pf_target)
        .def_readwrite("seed", &Scenario::seed)
        .def_readwrite("trials", &Scenario::trials)
        .def_readwrite("block_size", &Scenario::block_size)
        .def_readwrite("threads", &Scenario::threads)
        .def_readwrite("noiseless", &Scenario::noiseless)
        .def_readwrite("unit_norm_channels", &Scenario::unit_norm_channels);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("ber", &RunResult::ber)
        .def_readonly("err_count", &RunResult::err_count)
        .def_readonly("trials", &RunResult::trials)
        .def_readonly("ci95", &RunResult::ci95)
        .def_readonly("wall_time_s", &RunResult::wall_time_s);

    py::class_<RocPoint>(m, "RocPoint")
        .def_readonly("pf_target", &RocPoint::pf_target)
        .def_readonly("v_t", &RocPoint::v_t)
        .def_readonly("pf_emp", &RocPoint::pf_emp)
        .def_readonly("pd_emp", &RocPoint::pd_emp)
        .def_readonly("pd_analytic", &RocPoint::pd_analytic);

    py::class_<EstimationBenchRow>(m, "EstimationBenchRow")
        .def_readonly("preamble_len", &EstimationBenchRow::preamble_len)
        .def_readonly("method", &EstimationBenchRow::method)
        .def_readonly("result", &EstimationBenchRow::result)
        .def_readonly("align_mean", &EstimationBenchRow::align_mean)
        .def_readonly("align_median", &EstimationBenchRow::align_median)
        .def_readonly("align_min", &EstimationBenchRow::align_min)
        .def_readonly("not_enough_samples", &EstimationBenchRow::not_enough_samples);

    m.def("run_ber", &run_ber, py::arg("scenario"), py::call_guard<py::gil_scoped_release>());
    m.def("run_roc", &run_roc, py::arg("scenario"), py::arg("pf_grid"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_estimation_bench", &run_estimation_bench, py::arg("scenario"),
          py::arg("l_values"), py::arg("methods"), py::call_guard<py::gil_scoped_release>());

    // ---- config-driven commands (CSV text in, CSV text out) -----------------
    m.def("ber_sweep_csv", [](const std::string &config_text)
          { return render_csv(cmd_ber_sweep(parse_config_text(config_text))); },
          py::arg("config_text"), py::call_guard<py::gil_scoped_release>());
    m.def("roc_csv", [](const std::string &config_text)
          { return render_csv(cmd_roc(parse_config_text(config_text))); },
          py::arg("config_text"), py::call_guard<py::gil_scoped_release>());
    m.def("theta_map_csv", [](const std::string &config_text)
          { return render_csv(cmd_theta_map(parse_config_text(config_text))); },
          py::arg("config_text"), py::call_guard<py::gil_scoped_release>());
    m.def("estimation_bench_csv", [](const std::string &config_text)
          { return render_csv(cmd_estimation_bench(parse_config_text(config_text))); },
          py::arg("config_text"), py::call_guard<py::gil_scoped_release>());

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("pass_", &CheckResult::pass)
        .def_readonly("metric", &CheckResult::metric)
        .def_readonly("threshold", &CheckResult::threshold)
        .def_readonly("note", &CheckResult::note);
    m.def("run_validation", [](std::uint64_t seed, std::int64_t mc_draws)
          {
              ValidationOptions opt;
              opt.seed = seed;
              opt.mc_draws = mc_draws;
              return run_validation(opt);
          },
          py::arg("seed") = 12345, py::arg("mc_draws") = 200000,
          py::call_guard<py::gil_scoped_release>());
}
