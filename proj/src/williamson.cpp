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
#include "quadctl/williamson.hpp"

#include "quadctl/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace quadctl {

RealMatrix WilliamsonDecomposition::normal_form() const {
    const auto n = static_cast<Eigen::Index>(nu.size());
    RealMatrix d = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        d(2 * j, 2 * j) = nu[static_cast<std::size_t>(j)];
        d(2 * j + 1, 2 * j + 1) = nu[static_cast<std::size_t>(j)];
    }
    return d;
}

std::vector<double> symplectic_eigenvalues(const QuadraticHamiltonian& h, double tol) {
    require_positive_definite(h, tol);
    const RealMatrix a_omega = h.matrix() * symplectic_form(h.modes());
    Eigen::EigenSolver<RealMatrix> solver(a_omega, false);
    std::vector<double> magnitudes;
    magnitudes.reserve(static_cast<std::size_t>(a_omega.rows()));
    for (const auto& lambda : solver.eigenvalues()) {
        magnitudes.push_back(std::abs(lambda));
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    // Eigenvalues come in pairs +-i nu; average each pair of magnitudes.
    std::vector<double> nu;
    for (std::size_t j = 0; j + 1 < magnitudes.size(); j += 2) {
        nu.push_back(0.5 * (magnitudes[j] + magnitudes[j + 1]));
    }
    return nu;
}

WilliamsonDecomposition williamson_decompose(const QuadraticHamiltonian& h, double tol,
                                             double residual_tol) {
    require_positive_definite(h, tol);
    const ModeCount n = h.modes();
    const int dim = n.dimension();
    const RealMatrix& a = h.matrix();

    Eigen::SelfAdjointEigenSolver<RealMatrix> a_solver(a);
    const RealMatrix root = a_solver.operatorSqrt();
    const RealMatrix m = root * symplectic_form(n) * root;  // antisymmetric

    // i M is Hermitian with eigenvalues -nu_n..-nu_1, nu_1..nu_n. For an eigenvector
    // u = x + i y of nu > 0: M x = nu y and M y = -nu x, with |x| = |y| = 1/sqrt(2).
    const Eigen::MatrixXcd im = std::complex<double>(0.0, 1.0) * m.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> m_solver(im);

    RealMatrix o(dim, dim);
    WilliamsonDecomposition out;
    out.nu.resize(static_cast<std::size_t>(n.modes()));
    const double sqrt2 = std::sqrt(2.0);
    for (int j = 0; j < n.modes(); ++j) {
        const int col = n.modes() + j;
        out.nu[static_cast<std::size_t>(j)] = m_solver.eigenvalues()(col);
        const Eigen::VectorXcd u = m_solver.eigenvectors().col(col);
        // M O = O (D Omega): columns (sqrt2 x, -sqrt2 y) span the block of nu_j.
        o.col(2 * j) = sqrt2 * u.real();
        o.col(2 * j + 1) = -sqrt2 * u.imag();
    }

    Eigen::VectorXd inv_sqrt_d(dim);
    for (int j = 0; j < n.modes(); ++j) {
        const double s = 1.0 / std::sqrt(out.nu[static_cast<std::size_t>(j)]);
        inv_sqrt_d(2 * j) = s;
        inv_sqrt_d(2 * j + 1) = s;
    }
    out.V = root * o * inv_sqrt_d.asDiagonal();
    out.residual = (a - out.V * out.normal_form() * out.V.transpose()).norm();

    if (out.residual > residual_tol * a.norm()) {
        std::ostringstream os;
        os.precision(17);
        os << "Williamson reconstruction residual " << out.residual << " exceeds "
           << residual_tol << " * |A|_F; the matrix is likely ill-conditioned";
        throw NumericalError(os.str(), out.residual);
    }
    return out;
}

SpectrumCertificate spectrum_certificate(const QuadraticHamiltonian& h, double tol) {
    SpectrumCertificate cert;
    const RealMatrix a_omega = h.matrix() * symplectic_form(h.modes());
    Eigen::EigenSolver<RealMatrix> solver(a_omega, true);

    for (const auto& lambda : solver.eigenvalues()) {
        cert.eigenvalues.push_back(lambda);
        cert.max_real_part = std::max(cert.max_real_part, std::abs(lambda.real()));
    }
    std::sort(cert.eigenvalues.begin(), cert.eigenvalues.end(),
              [](const auto& x, const auto& y) {
                  return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real();
              });

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(solver.eigenvectors());
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    cert.diagonalizer_condition =
        smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
    cert.diagonalizable = std::isfinite(cert.diagonalizer_condition) &&
                          cert.diagonalizer_condition < kDiagonalizerConditionCap;

    cert.smallest_eigenvalue_of_a = h.smallest_eigenvalue();
    cert.positive_definite = is_positive_definite(h, tol);
    return cert;
}

}  // namespace quadctl
