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

#include "ambc/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ambc/errors.hpp"

namespace ambc
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::string cur;
            for (char c : s)
            {
                if (c == sep)
                {
                    out.push_back(trim(cur));
                    cur.clear();
                }
                else
                {
                    cur += c;
                }
            }
            out.push_back(trim(cur));
            return out;
        }

        double parse_double(const std::string &v, int line)
        {
            char *end = nullptr;
            const double d = std::strtod(v.c_str(), &end);
            if (end == v.c_str() || *end != '\0')
                throw ConfigError(line, "expected a number, got '" + v + "'");
            return d;
        }

        long long parse_int(const std::string &v, int line)
        {
            char *end = nullptr;
            const long long i = std::strtoll(v.c_str(), &end, 10);
            if (end == v.c_str() || *end != '\0')
                throw ConfigError(line, "expected an integer, got '" + v + "'");
            return i;
        }

        std::uint64_t parse_u64(const std::string &v, int line)
        {
            char *end = nullptr;
            const unsigned long long i = std::strtoull(v.c_str(), &end, 10);
            if (end == v.c_str() || *end != '\0')
                throw ConfigError(line, "expected an unsigned integer, got '" + v + "'");
            return i;
        }

        bool parse_bool(const std::string &v, int line)
        {
            if (v == "true")
                return true;
            if (v == "false")
                return false;
            throw ConfigError(line, "expected true/false, got '" + v + "'");
        }

        CsiMode parse_csi(const std::string &v, int line)
        {
            if (v == "perfect")
                return CsiMode::Perfect;
            if (v == "invcov")
                return CsiMode::InvCov;
            if (v == "svd")
                return CsiMode::Svd;
            if (v == "poweriter")
                return CsiMode::PowerIter;
            throw ConfigError(line, "unknown csi mode '" + v + "'");
        }

        std::string fmt(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        // gamma axis: "start:stop:step" (inclusive stop, half-step slack) or a
        // comma list
        std::vector<double> parse_gamma_axis(const std::string &v, int line)
        {
            std::vector<double> axis;
            if (v.find(':') != std::string::npos)
            {
                const auto parts = split(v, ':');
                if (parts.size() != 3)
                    throw ConfigError(line, "gamma range must be start:stop:step");
                const double start = parse_double(parts[0], line);
                const double stop = parse_double(parts[1], line);
                const double step = parse_double(parts[2], line);
                if (!(step > 0.0) || stop < start)
                    throw ConfigError(line, "gamma range must have step > 0 and stop >= start");
                for (double g = start; g <= stop + 0.5 * step; g += step)
                    axis.push_back(g);
                return axis;
            }
            for (const auto &item : split(v, ','))
                axis.push_back(parse_double(item, line));
            if (axis.empty())
                throw ConfigError(line, "empty gamma axis");
            return axis;
        }
    }

    std::string modulation_name(const BdAlphabet &alphabet)
    {
        if (alphabet.x0 == cplx(0.0, 0.0) && alphabet.x1 == cplx(1.0, 0.0))
            return "ook";
        if (alphabet.x0 == cplx(-1.0, 0.0) && alphabet.x1 == cplx(1.0, 0.0))
            return "bpsk";
        return "custom";
    }

    ExperimentConfig parse_config_text(const std::string &text)
    {
        ExperimentConfig cfg;
        std::istringstream in(text);
        std::string raw;
        int line_no = 0;

        enum class Section
        {
            None,
            Run,
            Scenario,
            Sweep,
            Grid,
            Output
        };
        Section section = Section::None;
        ScenarioBlock *block = nullptr;
        bool grid_touched = false;

        while (std::getline(in, raw))
        {
            ++line_no;
            std::string s = trim(raw);
            if (s.empty() || s[0] == '#')
                continue;

            if (s.front() == '[')
            {
                if (s.back() != ']')
                    throw ConfigError(line_no, "unterminated section header");
                const std::string inner = trim(s.substr(1, s.size() - 2));
                if (inner == "run")
                    section = Section::Run;
                else if (inner == "sweep")
                    section = Section::Sweep;
                else if (inner == "grid")
                {
                    section = Section::Grid;
                    grid_touched = true;
                }
                else if (inner == "output")
                    section = Section::Output;
                else if (inner == "scenario" || inner.rfind("scenario ", 0) == 0)
                {
                    section = Section::Scenario;
                    ScenarioBlock nb;
                    nb.name = inner == "scenario" ? "default" : trim(inner.substr(9));
                    if (nb.name.empty())
                        throw ConfigError(line_no, "empty scenario name");
                    for (const auto &existing : cfg.scenarios)
                        if (existing.name == nb.name)
                            throw ConfigError(line_no, "duplicate scenario name '" + nb.name + "'");
                    cfg.scenarios.push_back(nb);
                    block = &cfg.scenarios.back();
                }
                else
                    throw ConfigError(line_no, "unknown section '" + inner + "'");
                continue;
            }

            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ConfigError(line_no, "expected key = value");
            const std::string key = trim(s.substr(0, eq));
            const std::string val = trim(s.substr(eq + 1));
            if (key.empty() || val.empty())
                throw ConfigError(line_no, "expected key = value");

            switch (section)
            {
            case Section::None:
                throw ConfigError(line_no, "key outside any [section]");
            case Section::Run:
                if (key == "seed")
                    cfg.run.seed = parse_u64(val, line_no);
                else if (key == "trials")
                    cfg.run.trials = parse_int(val, line_no);
                else if (key == "block_size")
                    cfg.run.block_size = parse_int(val, line_no);
                else if (key == "threads")
                    cfg.run.threads = static_cast<int>(parse_int(val, line_no));
                else
                    throw ConfigError(line_no, "unknown [run] key '" + key + "'");
                break;
            case Section::Scenario:
            {
                Scenario &sc = block->scenario;
                if (key == "n_r")
                    sc.n_r = static_cast<int>(parse_int(val, line_no));
                else if (key == "array_axis")
                {
                    if (val == "y")
                        sc.array_axis = ArrayAxis::Y;
                    else if (val == "x")
                        sc.array_axis = ArrayAxis::X;
                    else
                        throw ConfigError(line_no, "array_axis must be y or x");
                }
                else if (key == "spacing")
                    sc.spacing = parse_double(val, line_no);
                else if (key == "d0")
                    sc.d0 = parse_double(val, line_no);
                else if (key == "bd_x")
                    sc.bd_pos.x() = parse_double(val, line_no);
                else if (key == "bd_y")
                    sc.bd_pos.y() = parse_double(val, line_no);
                else if (key == "modulation")
                {
                    if (val == "bpsk")
                        sc.alphabet = bpsk();
                    else if (val == "ook")
                        sc.alphabet = ook();
                    else
                        throw ConfigError(line_no, "unknown modulation '" + val + "'");
                }
                else if (key == "ambient")
                {
                    if (val == "qpsk")
                        sc.ambient.kind = AmbientSpec::Kind::ConstantModulus;
                    else if (val == "qam16")
                        sc.ambient.kind = AmbientSpec::Kind::Qam16;
                    else if (val == "gaussian")
                        sc.ambient.kind = AmbientSpec::Kind::Gaussian;
                    else
                        throw ConfigError(line_no, "unknown ambient '" + val + "'");
                }
                else if (key == "gamma_db")
                    sc.gamma_db = parse_double(val, line_no);
                else if (key == "l")
                    sc.preamble_len = static_cast<int>(parse_int(val, line_no));
                else if (key == "csi")
                    sc.csi = parse_csi(val, line_no);
                else if (key == "receiver")
                {
                    if (val == "optimum")
                        sc.receiver = ReceiverKind::Optimum;
                    else if (val == "simplified")
                        sc.receiver = ReceiverKind::Simplified;
                    else
                        throw ConfigError(line_no, "unknown receiver '" + val + "'");
                }
                else if (key == "pf_target")
                    sc.pf_target = parse_double(val, line_no);
                else if (key == "noiseless")
                    sc.noiseless = parse_bool(val, line_no);
                else if (key == "unit_norm_channels")
                    sc.unit_norm_channels = parse_bool(val, line_no);
                else
                    throw ConfigError(line_no, "unknown [scenario] key '" + key + "'");
                break;
            }
            case Section::Sweep:
                if (key == "gamma_db")
                    cfg.gamma_axis = parse_gamma_axis(val, line_no);
                else if (key == "n_r")
                {
                    cfg.n_r_list.clear();
                    for (const auto &item : split(val, ','))
                        cfg.n_r_list.push_back(static_cast<int>(parse_int(item, line_no)));
                }
                else if (key == "l")
                {
                    cfg.l_list.clear();
                    for (const auto &item : split(val, ','))
                        cfg.l_list.push_back(static_cast<int>(parse_int(item, line_no)));
                }
                else if (key == "methods")
                {
                    cfg.method_list.clear();
                    for (const auto &item : split(val, ','))
                        cfg.method_list.push_back(parse_csi(item, line_no));
                }
                else if (key == "pf")
                {
                    cfg.pf_grid.clear();
                    for (const auto &item : split(val, ','))
                        cfg.pf_grid.push_back(parse_double(item, line_no));
                }
                else
                    throw ConfigError(line_no, "unknown [sweep] key '" + key + "'");
                break;
            case Section::Grid:
                if (key == "x_min")
                    cfg.grid.x_min = parse_double(val, line_no);
                else if (key == "x_max")
                    cfg.grid.x_max = parse_double(val, line_no);
                else if (key == "y_min")
                    cfg.grid.y_min = parse_double(val, line_no);
                else if (key == "y_max")
                    cfg.grid.y_max = parse_double(val, line_no);
                else if (key == "nx")
                    cfg.grid.nx = static_cast<int>(parse_int(val, line_no));
                else if (key == "ny")
                    cfg.grid.ny = static_cast<int>(parse_int(val, line_no));
                else
                    throw ConfigError(line_no, "unknown [grid] key '" + key + "'");
                break;
            case Section::Output:
                if (key == "path")
                    cfg.output_path = val;
                else if (key == "json")
                    cfg.json_mirror = parse_bool(val, line_no);
                else
                    throw ConfigError(line_no, "unknown [output] key '" + key + "'");
                break;
            }
        }

        if (cfg.scenarios.empty())
            throw ConfigError(0, "config needs at least one [scenario] block");
        cfg.has_grid = grid_touched;
        return cfg;
    }

    ExperimentConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(0, "cannot open config file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config_text(buf.str());
    }

    std::string serialize_config(const ExperimentConfig &cfg)
    {
        std::ostringstream out;
        out << "[run]\n";
        out << "seed = " << cfg.run.seed << "\n";
        out << "trials = " << cfg.run.trials << "\n";
        out << "block_size = " << cfg.run.block_size << "\n";
        out << "threads = " << cfg.run.threads << "\n";

        for (const auto &blk : cfg.scenarios)
        {
            const Scenario &sc = blk.scenario;
            out << "\n[scenario " << blk.name << "]\n";
            out << "n_r = " << sc.n_r << "\n";
            out << "array_axis = " << (sc.array_axis == ArrayAxis::Y ? "y" : "x") << "\n";
            out << "spacing = " << fmt(sc.spacing) << "\n";
            out << "d0 = " << fmt(sc.d0) << "\n";
            out << "bd_x = " << fmt(sc.bd_pos.x()) << "\n";
            out << "bd_y = " << fmt(sc.bd_pos.y()) << "\n";
            out << "modulation = " << modulation_name(sc.alphabet) << "\n";
            out << "ambient = " << to_string(sc.ambient.kind) << "\n";
            out << "gamma_db = " << fmt(sc.gamma_db) << "\n";
            out << "l = " << sc.preamble_len << "\n";
            out << "csi = " << to_string(sc.csi) << "\n";
            out << "receiver = " << to_string(sc.receiver) << "\n";
            out << "pf_target = " << fmt(sc.pf_target) << "\n";
            out << "noiseless = " << (sc.noiseless ? "true" : "false") << "\n";
            out << "unit_norm_channels = " << (sc.unit_norm_channels ? "true" : "false") << "\n";
        }

        const bool any_sweep = !cfg.gamma_axis.empty() || !cfg.n_r_list.empty() ||
                               !cfg.l_list.empty() || !cfg.method_list.empty() || !cfg.pf_grid.empty();
        if (any_sweep)
        {
            out << "\n[sweep]\n";
            const auto join_d = [&](const std::vector<double> &v)
            {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + fmt(v[i]);
                return s;
            };
            if (!cfg.gamma_axis.empty())
                out << "gamma_db = " << join_d(cfg.gamma_axis) << "\n";
            if (!cfg.n_r_list.empty())
            {
                out << "n_r = ";
                for (std::size_t i = 0; i < cfg.n_r_list.size(); ++i)
                    out << (i ? "," : "") << cfg.n_r_list[i];
                out << "\n";
            }
            if (!cfg.l_list.empty())
            {
                out << "l = ";
                for (std::size_t i = 0; i < cfg.l_list.size(); ++i)
                    out << (i ? "," : "") << cfg.l_list[i];
                out << "\n";
            }
            if (!cfg.method_list.empty())
            {
                out << "methods = ";
                for (std::size_t i = 0; i < cfg.method_list.size(); ++i)
                    out << (i ? "," : "") << to_string(cfg.method_list[i]);
                out << "\n";
            }
            if (!cfg.pf_grid.empty())
                out << "pf = " << join_d(cfg.pf_grid) << "\n";
        }

        if (cfg.has_grid)
        {
            out << "\n[grid]\n";
            out << "x_min = " << fmt(cfg.grid.x_min) << "\n";
            out << "x_max = " << fmt(cfg.grid.x_max) << "\n";
            out << "y_min = " << fmt(cfg.grid.y_min) << "\n";
            out << "y_max = " << fmt(cfg.grid.y_max) << "\n";
            out << "nx = " << cfg.grid.nx << "\n";
            out << "ny = " << cfg.grid.ny << "\n";
        }

        out << "\n[output]\n";
        out << "path = " << cfg.output_path << "\n";
        out << "json = " << (cfg.json_mirror ? "true" : "false") << "\n";
        return out.str();
    }
}
