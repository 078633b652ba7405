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

#ifndef AMBC_TYPES_HPP
#define AMBC_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace ambc
{
    using cplx = std::complex<double>;
    using CVec = Eigen::VectorXcd; // complex column vector, one entry per Rx antenna
    using CMat = Eigen::MatrixXcd;
    using Vec2 = Eigen::Vector2d;  // 2-D node position, lengths in carrier wavelengths

    // min over unit phase of |a - e^{j phi} b| for unit vectors, computed via
    // the aligned difference vector. The algebraically equal sqrt(2 - 2|a^H b|)
    // cannot resolve distances below sqrt(eps) ~ 1.5e-8.
    inline double phase_aligned_distance(const CVec &a, const CVec &b)
    {
        const cplx c = b.dot(a); // b^H a
        const double mag = std::abs(c);
        if (mag == 0.0)
            return std::sqrt(2.0);
        return (a - (c / mag) * b).norm();
    }
}

#endif
