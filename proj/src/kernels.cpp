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
#include "quadctl/kernels.hpp"

#include <omp.h>

namespace quadctl::kernels {

void mode_distance_grid_serial(std::span<const double> nu, double step,
                               std::int64_t first_index, std::span<double> out) {
    const auto count = static_cast<std::int64_t>(out.size());
    for (std::int64_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(first_index + i) * step;
        out[static_cast<std::size_t>(i)] = mode_distance_unchecked(nu, t);
    }
}

void mode_distance_grid_parallel(std::span<const double> nu, double step,
                                 std::int64_t first_index, std::span<double> out) {
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(first_index + i) * step;
        out[static_cast<std::size_t>(i)] = mode_distance_unchecked(nu, t);
    }
}

std::vector<RealMatrix> bracket_batch_serial(std::span<const RealMatrix> left,
                                             std::span<const RealMatrix> right) {
    std::vector<RealMatrix> out;
    out.reserve(left.size() * right.size());
    for (const RealMatrix& x : left) {
        for (const RealMatrix& y : right) {
            out.push_back(x * y - y * x);
        }
    }
    return out;
}

std::vector<RealMatrix> bracket_batch_parallel(std::span<const RealMatrix> left,
                                               std::span<const RealMatrix> right) {
    const auto cols = static_cast<std::int64_t>(right.size());
    const auto total = static_cast<std::int64_t>(left.size()) * cols;
    std::vector<RealMatrix> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const RealMatrix& x = left[static_cast<std::size_t>(idx / cols)];
        const RealMatrix& y = right[static_cast<std::size_t>(idx % cols)];
        out[static_cast<std::size_t>(idx)] = x * y - y * x;
    }
    return out;
}

}  // namespace quadctl::kernels
