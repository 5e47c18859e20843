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
#ifndef QUADCTL_KERNELS_HPP
#define QUADCTL_KERNELS_HPP

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// variant with identical results; the serial versions are kept for testing and
// for the benchmark baseline.

#include "quadctl/symplectic.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace quadctl {

enum class Execution { serial, parallel };

namespace kernels {

/// sqrt(sum_k 8 sin^2(nu_k t / 2)), the Frobenius distance of diag(e^{-i nu t}, e^{i nu t})
/// from the identity.
inline double mode_distance_unchecked(std::span<const double> nu, double t) {
    double sum = 0.0;
    for (double v : nu) {
        const double s = std::sin(0.5 * v * t);
        sum += s * s;
    }
    return std::sqrt(8.0 * sum);
}

/// out[i] = mode distance at t = (first_index + i) * step.
void mode_distance_grid_serial(std::span<const double> nu, double step,
                               std::int64_t first_index, std::span<double> out);
void mode_distance_grid_parallel(std::span<const double> nu, double step,
                                 std::int64_t first_index, std::span<double> out);

inline void mode_distance_grid(Execution exec, std::span<const double> nu, double step,
                               std::int64_t first_index, std::span<double> out) {
    if (exec == Execution::parallel) {
        mode_distance_grid_parallel(nu, step, first_index, out);
    } else {
        mode_distance_grid_serial(nu, step, first_index, out);
    }
}

/// All commutators [left[i], right[j]], row-major in (i, j).
std::vector<RealMatrix> bracket_batch_serial(std::span<const RealMatrix> left,
                                             std::span<const RealMatrix> right);
std::vector<RealMatrix> bracket_batch_parallel(std::span<const RealMatrix> left,
                                               std::span<const RealMatrix> right);

inline std::vector<RealMatrix> bracket_batch(Execution exec, std::span<const RealMatrix> left,
                                             std::span<const RealMatrix> right) {
    return exec == Execution::parallel ? bracket_batch_parallel(left, right)
                                       : bracket_batch_serial(left, right);
}

}  // namespace kernels
}  // namespace quadctl

#endif  // QUADCTL_KERNELS_HPP
