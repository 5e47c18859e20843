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
#include "quadctl/operator_table.hpp"

#include "quadctl/errors.hpp"

#include <algorithm>
#include <string>

namespace quadctl {
namespace {

using enum Quadrature;

// Dictionary used below, with a = (q + i p)/sqrt2 and [q, p] = i:
//   a_j^dag a_k + a_j a_k^dag   =  q_j q_k + p_j p_k
//   a_j^dag a_k - a_j a_k^dag   =  i (q_j p_k - p_j q_k)
//   a_j^dag a_k^dag + a_j a_k   =  q_j q_k - p_j p_k
//   a_j^dag a_k^dag - a_j a_k   = -i (q_j p_k + p_j q_k)
//   a_j^dag a_j                 =  (q_j^2 + p_j^2)/2 + const
// For j = k the products q_j p_j are replaced by (q_j p_j + p_j q_j)/2.
// An entry A(x, y) = c with x != y contributes c x y to K; A(x, x) = c contributes c x^2 / 2.
const std::vector<OperatorForm>& table() {
    static const std::vector<OperatorForm> forms = {
        // i a1^dag a1 = i (q1^2 + p1^2)/2
        {"N1", "i a1^dag a1", {{q, 1, q, 1, 1.0}, {p, 1, p, 1, 1.0}}},
        // i (a1^2 + a1^dag^2) = i (q1^2 - p1^2)
        {"Q1", "i (a1^2 + a1^dag^2)", {{q, 1, q, 1, 2.0}, {p, 1, p, 1, -2.0}}},
        // a1^dag^2 - a1^2 = -i (q1 p1 + p1 q1)
        {"S_a1", "a1^dag^2 - a1^2", {{q, 1, p, 1, -2.0}}},
        // (a1^dag - a1)(a2 + a2^dag) = (-i sqrt2 p1)(sqrt2 q2) = -2 i p1 q2
        {"O1", "a1^dag a2^dag + a1^dag a2 - a1 a2^dag - a1 a2", {{p, 1, q, 2, -2.0}}},
        // i (a1 + a1^dag)(a2 + a2^dag) = 2 i q1 q2
        {"O2", "i (a1^dag a2^dag + a1^dag a2 + a1 a2^dag + a1 a2)", {{q, 1, q, 2, 2.0}}},
        // i (q1 p2 - p1 q2)
        {"R_a12", "a1^dag a2 - a1 a2^dag", {{q, 1, p, 2, 1.0}, {p, 1, q, 2, -1.0}}},
        // -i (q1 p2 + p1 q2)
        {"T_a12", "a1^dag a2^dag - a1 a2", {{q, 1, p, 2, -1.0}, {p, 1, q, 2, -1.0}}},
        // -i (q2 p2 + p2 q2)
        {"S_a2", "a2^dag^2 - a2^2", {{q, 2, p, 2, -2.0}}},
        // i (q1 q2 - p1 p2)
        {"T_b12", "i (a1^dag a2^dag + a1 a2)", {{q, 1, q, 2, 1.0}, {p, 1, p, 2, -1.0}}},
        // i [(q1 q2 - p1 p2) - (q1 q2 + p1 p2)] = -2 i p1 p2
        {"O3", "i (a1^dag a2^dag - a1^dag a2 - a1 a2^dag + a1 a2)", {{p, 1, p, 2, -2.0}}},
        // i (q1 q2 + p1 p2)
        {"R_b12", "i (a1^dag a2 + a1 a2^dag)", {{q, 1, q, 2, 1.0}, {p, 1, p, 2, 1.0}}},
        // i (q2^2 + p2^2)/2
        {"P2", "i a2^dag a2", {{q, 2, q, 2, 1.0}, {p, 2, p, 2, 1.0}}},
        // i (q2^2 - p2^2)
        {"S_b2", "i (a2^dag^2 + a2^2)", {{q, 2, q, 2, 2.0}, {p, 2, p, 2, -2.0}}},
        // i (q2 q3 + p2 p3)
        {"R_b23", "i (a2^dag a3 + a2 a3^dag)", {{q, 2, q, 3, 1.0}, {p, 2, p, 3, 1.0}}},
        // -(a1^dag a2 - a1 a2^dag) = -i (q1 p2 - p1 q2)
        {"Rbar_a12", "a1 a2^dag - a1^dag a2", {{q, 1, p, 2, -1.0}, {p, 1, q, 2, 1.0}}},
        // i (q1 q3 + p1 p3)
        {"R_b13", "i (a1^dag a3 + a1 a3^dag)", {{q, 1, q, 3, 1.0}, {p, 1, p, 3, 1.0}}},
    };
    return forms;
}

int index_of(Quadrature x, int mode) { return 2 * (mode - 1) + (x == Quadrature::p ? 1 : 0); }

}  // namespace

RealMatrix OperatorForm::quadratic_form(ModeCount n) const {
    RealMatrix a = RealMatrix::Zero(n.dimension(), n.dimension());
    for (const QuadratureEntry& e : entries) {
        if (e.mode_x > n.modes() || e.mode_y > n.modes()) {
            throw ShapeError("operator " + std::string(name) + " needs at least " +
                             std::to_string(std::max(e.mode_x, e.mode_y)) + " modes");
        }
        const int r = index_of(e.x, e.mode_x);
        const int c = index_of(e.y, e.mode_y);
        a(r, c) = e.value;
        a(c, r) = e.value;
    }
    return a;
}

RealMatrix OperatorForm::generator(ModeCount n) const {
    return -quadratic_form(n) * symplectic_form(n);
}

std::span<const OperatorForm> operator_table() { return table(); }

const OperatorForm& operator_form(std::string_view name) {
    for (const OperatorForm& f : table()) {
        if (f.name == name) {
            return f;
        }
    }
    throw InvalidArgumentError("unknown operator form '" + std::string(name) + "'");
}

}  // namespace quadctl
