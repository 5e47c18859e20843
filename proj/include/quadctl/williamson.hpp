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
#ifndef QUADCTL_WILLIAMSON_HPP
#define QUADCTL_WILLIAMSON_HPP

#include "quadctl/hamiltonian.hpp"

#include <complex>
#include <vector>

namespace quadctl {

/// Condition-number cap on the eigenvector matrix of A Omega; above it the matrix is
/// reported as not diagonalizable within double precision.
inline constexpr double kDiagonalizerConditionCap = 1e8;

inline constexpr double kDefiniteTol = 1e-10;

/// A = V D V^T with V symplectic and D = diag(nu1, nu1, ..., nun, nun).
struct WilliamsonDecomposition {
    RealMatrix V;
    std::vector<double> nu;  // ascending
    double residual = 0.0;   // |A - V D V^T|_F

    RealMatrix normal_form() const;
};

struct SpectrumCertificate {
    std::vector<std::complex<double>> eigenvalues;  // of A Omega
    double max_real_part = 0.0;                     // max |Re lambda|
    bool diagonalizable = false;
    double diagonalizer_condition = 0.0;            // cond_2 of the eigenvector matrix
    double smallest_eigenvalue_of_a = 0.0;
    bool positive_definite = false;
};

/// Positive imaginary parts of the spectrum of A Omega, ascending. A must be positive
/// definite (relative tolerance `tol`), otherwise DefinitenessError.
std::vector<double> symplectic_eigenvalues(const QuadraticHamiltonian& h,
                                           double tol = kDefiniteTol);

/// Williamson decomposition via the canonical form of A^{1/2} Omega A^{1/2}.
/// Throws NumericalError if the reconstruction residual exceeds
/// `residual_tol * |A|_F`.
WilliamsonDecomposition williamson_decompose(const QuadraticHamiltonian& h,
                                             double tol = kDefiniteTol,
                                             double residual_tol = 1e-8);

/// Spectral facts about A Omega for any symmetric A. Verdicts are data, never errors.
SpectrumCertificate spectrum_certificate(const QuadraticHamiltonian& h,
                                         double tol = kDefiniteTol);

}  // namespace quadctl

#endif  // QUADCTL_WILLIAMSON_HPP
