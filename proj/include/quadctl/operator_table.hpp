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
#ifndef QUADCTL_OPERATOR_TABLE_HPP
#define QUADCTL_OPERATOR_TABLE_HPP

#include "quadctl/symplectic.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace quadctl {

enum class Quadrature { q, p };

/// A(x, y) = A(y, x) = value for quadratures x of mode_x and y of mode_y (1-based).
struct QuadratureEntry {
    Quadrature x;
    int mode_x;
    Quadrature y;
    int mode_y;
    double value;
};

/// A quadratic mode-operator expression Z written as Z = i K with K = 1/2 R^T A R
/// (constant offsets dropped). Both Hermitian forms i(...) and anti-Hermitian forms
/// such as a^dag^2 - a^2 have this shape, so each maps to the generator -A Omega.
struct OperatorForm {
    std::string_view name;
    std::string_view expression;
    std::vector<QuadratureEntry> entries;

    /// A on n modes.
    RealMatrix quadratic_form(ModeCount n) const;
    /// -A Omega on n modes.
    RealMatrix generator(ModeCount n) const;
};

/// Hand-expanded operators used by the chain identity checks.
std::span<const OperatorForm> operator_table();

/// Lookup by name; throws InvalidArgumentError for unknown names.
const OperatorForm& operator_form(std::string_view name);

}  // namespace quadctl

#endif  // QUADCTL_OPERATOR_TABLE_HPP
