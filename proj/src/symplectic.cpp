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
#include "quadctl/symplectic.hpp"

#include "quadctl/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

namespace quadctl {

ModeCount::ModeCount(int modes) : modes_(modes) {
    if (modes < 1) {
        throw InvalidArgumentError("mode count must be >= 1, got " + std::to_string(modes));
    }
}

void require_square(const RealMatrix& m, std::string_view what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ShapeError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_finite(const RealMatrix& m, std::string_view what) {
    if (!m.allFinite()) {
        throw InvalidArgumentError(std::string(what) + ": matrix has non-finite entries");
    }
}

ModeCount modes_of(const RealMatrix& m) {
    require_square(m, "phase-space matrix");
    if (m.rows() % 2 != 0) {
        throw ShapeError("phase-space matrix must have even dimension, got " +
                         std::to_string(m.rows()));
    }
    return ModeCount(static_cast<int>(m.rows() / 2));
}

RealMatrix symplectic_form(ModeCount n) {
    RealMatrix omega = RealMatrix::Zero(n.dimension(), n.dimension());
    for (int j = 0; j < n.modes(); ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

double symplectic_residual(const RealMatrix& s) {
    const RealMatrix omega = symplectic_form(modes_of(s));
    return (s * omega * s.transpose() - omega).norm();
}

bool is_symplectic(const RealMatrix& s, double tol) {
    if (!(tol > 0.0)) {
        throw InvalidArgumentError("is_symplectic: tolerance must be positive");
    }
    return symplectic_residual(s) <= tol;
}

RealMatrix commutator(const RealMatrix& x, const RealMatrix& y) {
    require_square(x, "commutator lhs");
    require_square(y, "commutator rhs");
    if (x.rows() != y.rows()) {
        throw ShapeError("commutator: operands have dimensions " + std::to_string(x.rows()) +
                         " and " + std::to_string(y.rows()));
    }
    return x * y - y * x;
}

RealMatrix expm(const RealMatrix& g, double t) {
    require_square(g, "expm");
    require_finite(g, "expm");
    if (!std::isfinite(t)) {
        throw InvalidArgumentError("expm: time must be finite");
    }
    if (t == 0.0) {
        return RealMatrix::Identity(g.rows(), g.cols());
    }
    const RealMatrix scaled = g * t;
    return scaled.exp();
}

double identity_distance(const RealMatrix& s) {
    require_square(s, "identity_distance");
    return (s - RealMatrix::Identity(s.rows(), s.cols())).norm();
}

}  // namespace quadctl
