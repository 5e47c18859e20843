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
#include "quadctl/recurrence.hpp"

#include "quadctl/errors.hpp"
#include "quadctl/williamson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace quadctl {
namespace {

constexpr std::int64_t kBlock = 1 << 16;
constexpr double kDefaultHorizonPeriods = 1e5;

struct Minimum {
    double t;
    double value;
};

// Golden-section search on [lo, hi]. The distance is V-shaped near a recurrence,
// which golden section handles without derivative information.
template <class F>
Minimum golden_minimize(F&& f, double lo, double hi, double start) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    Minimum best{start, f(start)};
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (fc < best.value) best = {c, fc};
        if (fd < best.value) best = {d, fd};
    }
    return best;
}

}  // namespace

double mode_distance(std::span<const double> nu, double t) {
    if (nu.empty()) {
        throw InvalidArgumentError("mode_distance: empty frequency list");
    }
    for (double v : nu) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw InvalidArgumentError("mode_distance: frequencies must be positive and finite");
        }
    }
    return kernels::mode_distance_unchecked(nu, t);
}

double conditioning_bound(const QuadraticHamiltonian& h, double tol) {
    using cd = std::complex<double>;
    const WilliamsonDecomposition w = williamson_decompose(h, tol);
    const ModeCount n = h.modes();
    const int dim = n.dimension();

    // D Omega = U D' U^dag with D' = diag(+i nu1, -i nu1, ...).
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n.modes(); ++j) {
        u(2 * j, 2 * j) = s;
        u(2 * j, 2 * j + 1) = s;
        u(2 * j + 1, 2 * j) = cd(0.0, s);
        u(2 * j + 1, 2 * j + 1) = cd(0.0, -s);
    }
    const RealMatrix omega = symplectic_form(n);
    // V^{-1} = -Omega V^T Omega for symplectic V.
    const RealMatrix v_inv = -omega * w.V.transpose() * omega;
    const Eigen::MatrixXcd wmat = w.V.cast<cd>() * u;
    const Eigen::MatrixXcd wmat_inv = u.adjoint() * v_inv.cast<cd>();
    return wmat.norm() * wmat_inv.norm();
}

RecurrenceResult find_recurrence(const RecurrenceQuery& query, Execution exec) {
    if (!(query.epsilon > 0.0)) {
        throw InvalidArgumentError("find_recurrence: epsilon must be positive");
    }
    if (!(query.T >= 0.0) || !std::isfinite(query.T)) {
        throw InvalidArgumentError("find_recurrence: T must be finite and non-negative");
    }
    if (query.grid_points_per_period < 8) {
        throw InvalidArgumentError("find_recurrence: grid_points_per_period must be >= 8");
    }

    const QuadraticHamiltonian& h = query.hamiltonian;
    RecurrenceResult result;
    result.nu = symplectic_eigenvalues(h);
    result.K = conditioning_bound(h);

    const double two_pi = 2.0 * std::numbers::pi;
    const double nu_min = result.nu.front();
    const double nu_max = result.nu.back();
    result.t_max = query.t_max.value_or(kDefaultHorizonPeriods * two_pi / nu_min);
    if (!(result.t_max > query.T) || !std::isfinite(result.t_max)) {
        throw InvalidArgumentError("find_recurrence: t_max must be finite and exceed T");
    }
    const double step = (two_pi / nu_max) / query.grid_points_per_period;
    result.grid_step = step;

    const RealMatrix g = generator(h).matrix();
    auto true_distance = [&](double t) { return identity_distance(expm(g, t)); };

    const double threshold = query.epsilon / result.K;
    const std::int64_t first = static_cast<std::int64_t>(std::floor(query.T / step)) + 1;
    const std::int64_t last = static_cast<std::int64_t>(std::floor(result.t_max / step));

    result.best_distance_seen = std::numeric_limits<double>::infinity();
    double grid_min_value = std::numeric_limits<double>::infinity();
    std::int64_t grid_min_index = first;

    // Refines a run of sub-threshold grid points around its smallest member.
    auto refine = [&](std::int64_t k) {
        const double center = static_cast<double>(k) * step;
        const double lo = std::max(static_cast<double>(k - 1) * step, query.T);
        const double hi = std::min(static_cast<double>(k + 1) * step, result.t_max);
        const Minimum m = golden_minimize(true_distance, lo, hi, center);
        ++result.candidates_refined;
        if (m.value < result.best_distance_seen) {
            result.best_distance_seen = m.value;
            result.best_time_seen = m.t;
        }
        if (m.t > query.T && m.value < query.epsilon) {
            result.found = true;
            result.tau = m.t;
            result.achieved_distance = m.value;
            result.mode_distance_at_tau = kernels::mode_distance_unchecked(result.nu, m.t);
            return true;
        }
        return false;
    };

    std::vector<double> buffer(static_cast<std::size_t>(std::min<std::int64_t>(
        kBlock, std::max<std::int64_t>(last - first + 1, 1))));
    bool in_run = false;
    std::int64_t run_best = 0;
    double run_best_value = 0.0;

    for (std::int64_t block = first; block <= last; block += kBlock) {
        const std::int64_t count = std::min(kBlock, last - block + 1);
        std::span<double> out(buffer.data(), static_cast<std::size_t>(count));
        kernels::mode_distance_grid(exec, result.nu, step, block, out);
        result.grid_points_scanned += count;
        for (std::int64_t i = 0; i < count; ++i) {
            const double v = out[static_cast<std::size_t>(i)];
            const std::int64_t k = block + i;
            if (v < grid_min_value) {
                grid_min_value = v;
                grid_min_index = k;
            }
            if (v < threshold) {
                if (!in_run || v < run_best_value) {
                    run_best = k;
                    run_best_value = v;
                }
                in_run = true;
            } else if (in_run) {
                in_run = false;
                if (refine(run_best)) {
                    return result;
                }
            }
        }
    }
    if (in_run && refine(run_best)) {
        return result;
    }
    if (result.candidates_refined == 0 && last >= first) {
        const double t = static_cast<double>(grid_min_index) * step;
        result.best_distance_seen = true_distance(t);
        result.best_time_seen = t;
    }
    return result;
}

WitnessResult non_recurrence_witness(const QuadraticHamiltonian& h, double T, int samples) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw InvalidArgumentError("non_recurrence_witness: T must be positive and finite");
    }
    if (samples < 1) {
        throw InvalidArgumentError("non_recurrence_witness: samples must be >= 1");
    }
    const RealMatrix g = generator(h).matrix();
    WitnessResult out{std::numeric_limits<double>::infinity(), 0.0};
    for (int k = 1; k <= samples; ++k) {
        const double t = T * static_cast<double>(k) / samples;
        const double d = identity_distance(expm(g, t));
        if (d < out.min_distance) {
            out = {d, t};
        }
    }
    return out;
}

}  // namespace quadctl
