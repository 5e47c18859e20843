/*
 Copyright 2026 The quadctl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef QUADCTL_SYMPLECTIC_HPP
#define QUADCTL_SYMPLECTIC_HPP

#include <Eigen/Dense>

#include <string_view>

namespace quadctl {

/// Dense real matrix used for A, S, G, Omega, V and covariance matrices.
/// Quadratures are always interleaved: R = (q1, p1, ..., qn, pn).
using RealMatrix = Eigen::MatrixXd;

/// Number of bosonic modes. The phase-space dimension is twice this.
class ModeCount {
public:
    explicit ModeCount(int modes);

    int modes() const noexcept { return modes_; }
    int dimension() const noexcept { return 2 * modes_; }

    friend bool operator==(ModeCount, ModeCount) = default;

private:
    int modes_;
};

/// Mode count of a 2n x 2n matrix; throws ShapeError for odd or non-square input.
ModeCount modes_of(const RealMatrix& m);

void require_square(const RealMatrix& m, std::string_view what);
void require_finite(const RealMatrix& m, std::string_view what);

/// Block-diagonal symplectic form with n copies of [[0, 1], [-1, 0]].
RealMatrix symplectic_form(ModeCount n);

/// Frobenius norm of S Omega S^T - Omega.
double symplectic_residual(const RealMatrix& s);

/// True iff the symplectic residual of `s` is at most `tol`.
bool is_symplectic(const RealMatrix& s, double tol);

/// XY - YX.
RealMatrix commutator(const RealMatrix& x, const RealMatrix& y);

/// e^{G t} by scaling and squaring with a Pade core.
RealMatrix expm(const RealMatrix& g, double t);

/// Frobenius norm of S - 1.
double identity_distance(const RealMatrix& s);

}  // namespace quadctl

#endif  // QUADCTL_SYMPLECTIC_HPP
