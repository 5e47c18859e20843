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
#include "quadctl/lie_closure.hpp"

#include "quadctl/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace quadctl {
namespace {

constexpr int kBorderlineKeep = 8;
constexpr double kBorderlineDecades = 1e-3;

Eigen::Map<const Eigen::VectorXd> vec(const RealMatrix& m) {
    return {m.data(), m.size()};
}

RealMatrix unvec(const Eigen::VectorXd& v, int dim) {
    return Eigen::Map<const RealMatrix>(v.data(), dim, dim);
}

// Residual of the unit vector `v` against the first `cols` columns of `q`, by modified
// Gram-Schmidt with one reorthogonalization pass. `v` is left orthogonalized.
double orthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& q, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < cols; ++c) {
            v -= q.col(c).dot(v) * q.col(c);
        }
    }
    return v.norm();
}

}  // namespace

int symplectic_algebra_dimension(ModeCount n) { return n.modes() * (2 * n.modes() + 1); }

int passive_algebra_dimension(ModeCount n) { return n.modes() * n.modes(); }

LieSubspace closure(std::span<const SymplecticGenerator> generators, double tol, int max_rounds,
                    Execution exec) {
    if (generators.empty()) {
        throw InvalidArgumentError("closure: generator list is empty");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgumentError("closure: tolerance must be positive");
    }
    const ModeCount n = generators.front().modes();
    for (const auto& g : generators) {
        if (g.modes() != n) {
            throw ShapeError("closure: generators act on different mode counts");
        }
    }

    const int dim = n.dimension();
    const int full = symplectic_algebra_dimension(n);
    const int budget = max_rounds > 0 ? max_rounds : 2 * full;
    // Brackets of unit operands below this norm are indistinguishable from rounding
    // noise at relative tolerance `tol`.
    const double zero_floor = 8.0 * dim * std::numeric_limits<double>::epsilon() / tol;

    LieSubspace sub(n);
    sub.tol_ = tol;
    sub.q_.resize(static_cast<Eigen::Index>(dim) * dim, full);
    std::vector<RealMatrix> directions;  // orthonormal directions as matrices

    auto try_add = [&](const RealMatrix& candidate, double floor, const std::string& label) {
        const double norm = candidate.norm();
        if (norm <= floor) {
            return false;
        }
        Eigen::VectorXd v = vec(candidate) / norm;
        const int cols = sub.dimension();
        const double residual = orthogonalize(v, sub.q_, cols);
        if (residual > tol && cols < full) {
            sub.q_.col(cols) = v / residual;
            directions.push_back(unvec(sub.q_.col(cols), dim));
            sub.basis_.emplace_back(candidate / norm, label);
            sub.weakest_accept_ = std::min(sub.weakest_accept_, residual);
            return true;
        }
        if (residual >= kBorderlineDecades * tol) {
            sub.borderline_.push_back(residual);
        }
        return false;
    };

    std::vector<RealMatrix> seeds;
    std::vector<int> frontier;
    for (const auto& g : generators) {
        const double norm = g.matrix().norm();
        if (norm == 0.0) {
            continue;
        }
        seeds.push_back(g.matrix() / norm);
        if (try_add(seeds.back(), 0.0, g.source())) {
            frontier.push_back(sub.dimension() - 1);
        }
    }

    bool closed = false;
    for (int round = 1; round <= budget; ++round) {
        if (sub.dimension() == full || frontier.empty()) {
            closed = true;
            break;
        }
        std::vector<RealMatrix> left;
        left.reserve(frontier.size());
        for (int idx : frontier) {
            left.push_back(directions[static_cast<std::size_t>(idx)]);
        }
        const auto candidates = kernels::bracket_batch(exec, left, seeds);
        std::vector<int> next;
        const std::string label = "depth " + std::to_string(round);
        for (const RealMatrix& c : candidates) {
            if (try_add(c, zero_floor, label)) {
                next.push_back(sub.dimension() - 1);
            }
        }
        if (!next.empty()) {
            sub.depth_ = round;
        }
        frontier = std::move(next);
    }
    if (!closed) {
        closed = sub.dimension() == full || frontier.empty();
    }
    sub.closed_ = closed;
    sub.q_.conservativeResize(Eigen::NoChange, sub.dimension());

    std::sort(sub.borderline_.begin(), sub.borderline_.end(), std::greater<>());
    if (sub.borderline_.size() > kBorderlineKeep) {
        sub.borderline_.resize(kBorderlineKeep);
    }
    return sub;
}

RankReport rank_criterion(const LieSubspace& sub) {
    RankReport report;
    report.dimension_found = sub.dimension();
    report.dimension_full = symplectic_algebra_dimension(sub.modes());
    report.rank_criterion_met = report.dimension_found == report.dimension_full;
    report.residual_spectrum = sub.borderline_rejections();
    return report;
}

bool contains(const LieSubspace& sub, const SymplecticGenerator& g, double tol) {
    if (g.modes() != sub.modes()) {
        throw ShapeError("contains: generator and subspace act on different mode counts");
    }
    const double norm = g.matrix().norm();
    if (norm == 0.0) {
        return true;
    }
    const Eigen::VectorXd v = vec(g.matrix()) / norm;
    const Eigen::MatrixXd& q = sub.orthonormal_vectors();
    const Eigen::VectorXd residual = v - q * (q.transpose() * v);
    return residual.norm() <= tol;
}

bool passivity_check(const LieSubspace& sub, double tol) {
    const RealMatrix omega = symplectic_form(sub.modes());
    return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const SymplecticGenerator& g) {
        const RealMatrix& m = g.matrix();
        return (m * omega - omega * m).norm() <= tol * std::max(1.0, m.norm());
    });
}

}  // namespace quadctl
