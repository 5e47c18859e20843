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
#ifndef QUADCTL_LIE_CLOSURE_HPP
#define QUADCTL_LIE_CLOSURE_HPP

#include "quadctl/hamiltonian.hpp"
#include "quadctl/kernels.hpp"

#include <span>
#include <vector>

namespace quadctl {

/// dim sp(2n, R) = n (2n + 1).
int symplectic_algebra_dimension(ModeCount n);

/// dim of the passive (Omega-commuting) subalgebra, n^2.
int passive_algebra_dimension(ModeCount n);

inline constexpr double kDefaultClosureTol = 1e-9;

/// A Lie subalgebra of sp(2n, R) spanned by bracket closure.
class LieSubspace {
public:
    ModeCount modes() const noexcept { return modes_; }
    int dimension() const noexcept { return static_cast<int>(basis_.size()); }

    /// Unit-norm generators in the order they were accepted.
    const std::vector<SymplecticGenerator>& basis() const noexcept { return basis_; }

    /// Orthonormalized vectorized basis, one (2n)^2 column per element.
    const Eigen::MatrixXd& orthonormal_vectors() const noexcept { return q_; }

    bool closed() const noexcept { return closed_; }
    int bracket_depth_reached() const noexcept { return depth_; }
    double tolerance() const noexcept { return tol_; }

    /// Relative residuals of rejected candidates within three decades below the
    /// tolerance, largest first (at most 8).
    const std::vector<double>& borderline_rejections() const noexcept { return borderline_; }

    /// Smallest relative residual among accepted candidates.
    double weakest_acceptance() const noexcept { return weakest_accept_; }

private:
    friend LieSubspace closure(std::span<const SymplecticGenerator>, double, int, Execution);

    explicit LieSubspace(ModeCount n) : modes_(n) {}

    ModeCount modes_;
    std::vector<SymplecticGenerator> basis_;
    Eigen::MatrixXd q_;
    bool closed_ = false;
    int depth_ = 0;
    double tol_ = 0.0;
    std::vector<double> borderline_;
    double weakest_accept_ = 1.0;
};

struct RankReport {
    int dimension_found = 0;
    int dimension_full = 0;
    bool rank_criterion_met = false;
    std::vector<double> residual_spectrum;
};

/// Breadth-first bracket closure. Each round brackets the elements accepted in the
/// previous round against every seed; a candidate joins iff its component orthogonal
/// to the current span exceeds `tol` times its norm. `max_rounds <= 0` selects the
/// default budget 2 n (2n + 1). Exhausting the budget yields closed() == false.
LieSubspace closure(std::span<const SymplecticGenerator> generators,
                    double tol = kDefaultClosureTol, int max_rounds = 0,
                    Execution exec = Execution::parallel);

RankReport rank_criterion(const LieSubspace& sub);

/// True iff the projection residual of G onto the span is at most tol |G|.
bool contains(const LieSubspace& sub, const SymplecticGenerator& g, double tol = 1e-9);

/// True iff every basis generator commutes with Omega to `tol`.
bool passivity_check(const LieSubspace& sub, double tol = 1e-9);

}  // namespace quadctl

#endif  // QUADCTL_LIE_CLOSURE_HPP
