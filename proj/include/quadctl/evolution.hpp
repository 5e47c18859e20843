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
#ifndef QUADCTL_EVOLUTION_HPP
#define QUADCTL_EVOLUTION_HPP

#include "quadctl/hamiltonian.hpp"

#include <span>
#include <vector>

namespace quadctl {

/// H(t) = H0 + sum_k f_k(t) H_k.
class ControlModel {
public:
    ControlModel(QuadraticHamiltonian drift, std::vector<QuadraticHamiltonian> controls);

    ModeCount modes() const noexcept { return drift_.modes(); }
    const QuadraticHamiltonian& drift() const noexcept { return drift_; }
    const std::vector<QuadraticHamiltonian>& controls() const noexcept { return controls_; }
    int control_count() const noexcept { return static_cast<int>(controls_.size()); }

    /// A(f) = A0 + sum_k f_k A_k.
    RealMatrix matrix_at(std::span<const double> f) const;

private:
    QuadraticHamiltonian drift_;
    std::vector<QuadraticHamiltonian> controls_;
};

struct ControlSegment {
    double duration = 0.0;
    std::vector<double> f;
};

/// Piecewise-constant control values. Later segments act after earlier ones.
class ControlSchedule {
public:
    ControlSchedule() = default;
    explicit ControlSchedule(std::vector<ControlSegment> segments);

    const std::vector<ControlSegment>& segments() const noexcept { return segments_; }
    bool empty() const noexcept { return segments_.empty(); }

    /// This schedule followed by `next`.
    ControlSchedule then(const ControlSchedule& next) const;

private:
    std::vector<ControlSegment> segments_;
};

/// S = e^{-A_N Omega d_N} ... e^{-A_1 Omega d_1}.
RealMatrix propagate(const ControlModel& model, const ControlSchedule& schedule);

/// Symmetric covariance matrix sigma_jk = <{R_j, R_k}>/2, vacuum = 1/2.
class CovarianceState {
public:
    /// Validates symmetry; with `check_physical` also requires sigma + (i/2) Omega >= 0.
    explicit CovarianceState(RealMatrix sigma, bool check_physical = false);

    const RealMatrix& sigma() const noexcept { return sigma_; }
    ModeCount modes() const { return modes_of(sigma_); }

    /// Smallest eigenvalue of the Hermitian matrix sigma + (i/2) Omega.
    double uncertainty_margin() const;

private:
    RealMatrix sigma_;
};

/// sigma -> S sigma S^T. Rejects S whose symplectic residual exceeds `tol`.
CovarianceState evolve_covariance(const CovarianceState& state, const RealMatrix& s,
                                  double tol = 1e-8);

/// |S Omega S^T - Omega|_F.
double audit_symplecticity(const RealMatrix& s);

}  // namespace quadctl

#endif  // QUADCTL_EVOLUTION_HPP
