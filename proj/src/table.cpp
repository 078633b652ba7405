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

#include "ambc/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ambc
{
    std::string format_sig12(double v)
    {
        if (std::isnan(v))
            return "nan";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    std::string render_csv(const Table &table)
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < table.header.size(); ++i)
            out << (i ? "," : "") << table.header[i];
        out << "\n";
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << "\n";
        }
        return out.str();
    }

    static void json_escape(std::ostringstream &out, const std::string &s)
    {
        out << '"';
        for (char c : s)
        {
            if (c == '"' || c == '\\')
                out << '\\' << c;
            else
                out << c;
        }
        out << '"';
    }

    std::string render_json(const Table &table)
    {
        std::ostringstream out;
        out << "[\n";
        for (std::size_t r = 0; r < table.rows.size(); ++r)
        {
            out << "  {";
            for (std::size_t i = 0; i < table.header.size(); ++i)
            {
                if (i)
                    out << ", ";
                json_escape(out, table.header[i]);
                out << ": ";
                json_escape(out, r < table.rows.size() ? table.rows[r][i] : "");
            }
            out << "}" << (r + 1 < table.rows.size() ? "," : "") << "\n";
        }
        out << "]\n";
        return out.str();
    }
}
