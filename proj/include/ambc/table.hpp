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

#ifndef AMBC_TABLE_HPP
#define AMBC_TABLE_HPP

#include <string>
#include <vector>

namespace ambc
{
    // Result table rendered to CSV (one header row, 12-significant-digit
    // numerics) or its JSON mirror (array of header-keyed objects with the
    // same cell strings).
    struct Table
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    std::string render_csv(const Table &table);
    std::string render_json(const Table &table);

    std::string format_sig12(double v); // "nan" for NaN, no signed-nan noise
}

#endif
