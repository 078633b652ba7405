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

#ifndef AMBC_VALIDATION_HPP
#define AMBC_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ambc
{
    // Self-check suite: projector algebra, closed-form eigensystem vs dense
    // solver, statistic identities, the two noncentrality forms, geometry
    // anchors, special-function round trips, and series-vs-Monte-Carlo
    // distribution agreement.

    struct CheckResult
    {
        std::string name;
        bool pass = false;
        double metric = 0.0;    // measured worst-case deviation (or value)
        double threshold = 0.0; // pass when metric <= threshold (see note)
        std::string note;
    };

    struct ValidationOptions
    {
        std::uint64_t seed = 12345;
        std::int64_t mc_draws = 200000;   // per series-vs-MC parameter set
        double kappa_perturbation = 0.0;  // test fixture: corrupt kappa before checking
    };

    std::vector<CheckResult> run_validation(const ValidationOptions &options);

    // "status,name,metric,threshold,note" lines, one per check.
    std::string render_validation_csv(const std::vector<CheckResult> &results);

    bool all_passed(const std::vector<CheckResult> &results);
}

#endif
