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
#include "quadctl/evolution.hpp"

#include "quadctl/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace quadctl {

ControlModel::ControlModel(QuadraticHamiltonian drift, std::vector<QuadraticHamiltonian> controls)
    : drift_(std::move(drift)), controls_(std::move(controls)) {
    for (const auto& c : controls_) {
        if (c.modes() != drift_.modes()) {
            throw ShapeError("control model: control '" + c.label() +
                             "' acts on a different mode count than the drift");
        }
    }
}

RealMatrix ControlModel::matrix_at(std::span<const double> f) const {
    if (f.size() != controls_.size()) {
        throw InvalidArgumentError("control model: expected " + std::to_string(controls_.size()) +
                                   " control values, got " + std::to_string(f.size()));
    }
    RealMatrix a = drift_.matrix();
    for (std::size_t k = 0; k < f.size(); ++k) {
        a += f[k] * controls_[k].matrix();
    }
    return a;
}

ControlSchedule::ControlSchedule(std::vector<ControlSegment> segments)
    : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& seg = segments_[i];
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            throw InvalidArgumentError("schedule segment " + std::to_string(i) +
                                       ": duration must be positive and finite");
        }
        for (double v : seg.f) {
            if (!std::isfinite(v)) {
                throw InvalidArgumentError("schedule segment " + std::to_string(i) +
                                           ": control value is not finite");
            }
        }
    }
}

ControlSchedule ControlSchedule::then(const ControlSchedule& next) const {
    std::vector<ControlSegment> joined = segments_;
    joined.insert(joined.end(), next.segments_.begin(), next.segments_.end());
    return ControlSchedule(std::move(joined));
}

RealMatrix propagate(const ControlModel& model, const ControlSchedule& schedule) {
    const int dim = model.modes().dimension();
    const RealMatrix omega = symplectic_form(model.modes());
    RealMatrix s = RealMatrix::Identity(dim, dim);
    for (const ControlSegment& seg : schedule.segments()) {
        const RealMatrix g = -model.matrix_at(seg.f) * omega;
        s = expm(g, seg.duration) * s;
    }
    return s;
}

CovarianceState::CovarianceState(RealMatrix sigma, bool check_physical)
    : sigma_(std::move(sigma)) {
    modes_of(sigma_);
    require_finite(sigma_, "covariance matrix");
    const double scale = std::max(1.0, sigma_.cwiseAbs().maxCoeff());
    if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw InvalidArgumentError("covariance matrix is not symmetric");
    }
    sigma_ = 0.5 * (sigma_ + sigma_.transpose());
    if (check_physical) {
        const double margin = uncertainty_margin();
        if (margin < -1e-10 * scale) {
            std::ostringstream os;
            os << "covariance matrix violates the uncertainty relation: smallest eigenvalue of "
                  "sigma + i Omega / 2 is "
               << margin;
            throw InvalidArgumentError(os.str());
        }
    }
}

double CovarianceState::uncertainty_margin() const {
    using cd = std::complex<double>;
    const RealMatrix omega = symplectic_form(modes());
    const Eigen::MatrixXcd m = sigma_.cast<cd>() + cd(0.0, 0.5) * omega.cast<cd>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

CovarianceState evolve_covariance(const CovarianceState& state, const RealMatrix& s, double tol) {
    if (s.rows() != state.sigma().rows() || s.cols() != state.sigma().cols()) {
        throw ShapeError("evolve_covariance: S and sigma have different dimensions");
    }
    const double residual = audit_symplecticity(s);
    if (residual > tol) {
        std::ostringstream os;
        os << "evolve_covariance: S is not symplectic (residual " << residual << ")";
        throw InvalidArgumentError(os.str());
    }
    const RealMatrix out = s * state.sigma() * s.transpose();
    return CovarianceState(0.5 * (out + out.transpose()));
}

double audit_symplecticity(const RealMatrix& s) { return symplectic_residual(s); }

}  // namespace quadctl
