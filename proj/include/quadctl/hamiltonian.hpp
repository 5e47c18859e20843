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
#ifndef QUADCTL_HAMILTONIAN_HPP
#define QUADCTL_HAMILTONIAN_HPP

#include "quadctl/symplectic.hpp"

#include <span>
#include <string>
#include <vector>

namespace quadctl {

enum class TermKind { number, hop, pair, squeeze, generic };

/// One mode-operator term of a quadratic Hamiltonian. Mode indices are 1-based.
///
///   number(j, w)    w a_j^dag a_j
///   hop(j, k, g)    g (a_j a_k^dag + h.c.)
///   pair(j, k, g)   g (a_j a_k + h.c.)
///   squeeze(j, x)   x (a_j^2 + a_j^dag^2)
///   generic(F)      1/2 R^T F R for a symmetric 2n x 2n fragment F
struct HamiltonianTerm {
    TermKind kind = TermKind::number;
    int j = 0;
    int k = 0;
    double coeff = 0.0;
    RealMatrix fragment;

    static HamiltonianTerm number(int j, double omega);
    static HamiltonianTerm hop(int j, int k, double g);
    static HamiltonianTerm pair(int j, int k, double g);
    static HamiltonianTerm squeeze(int j, double chi);
    static HamiltonianTerm generic(RealMatrix fragment);
};

std::string_view to_string(TermKind kind);

/// H = 1/2 R^T A R with A real symmetric. Constant offsets are not represented.
class QuadraticHamiltonian {
public:
    /// Validates shape, finiteness and symmetry (to 1e-12 relative) and stores the
    /// exactly symmetrized matrix.
    QuadraticHamiltonian(RealMatrix a, std::string label = {});

    static QuadraticHamiltonian zero(ModeCount n, std::string label = {});

    ModeCount modes() const noexcept { return modes_; }
    const RealMatrix& matrix() const noexcept { return a_; }
    const std::string& label() const noexcept { return label_; }

    QuadraticHamiltonian relabeled(std::string label) const;

    /// Smallest eigenvalue of A.
    double smallest_eigenvalue() const;

    friend QuadraticHamiltonian operator+(const QuadraticHamiltonian& lhs,
                                          const QuadraticHamiltonian& rhs);
    friend QuadraticHamiltonian operator*(double c, const QuadraticHamiltonian& h);

private:
    ModeCount modes_;
    RealMatrix a_;
    std::string label_;
};

/// Element G = -A Omega of sp(2n, R), the matrix image of iH.
class SymplecticGenerator {
public:
    /// Validates that G Omega is symmetric to `tol` relative to |G|.
    explicit SymplecticGenerator(RealMatrix g, std::string source = {}, double tol = 1e-10);

    ModeCount modes() const noexcept { return modes_; }
    const RealMatrix& matrix() const noexcept { return g_; }
    const std::string& source() const noexcept { return source_; }

    /// The symmetric A with G = -A Omega.
    QuadraticHamiltonian hamiltonian() const;

private:
    ModeCount modes_;
    RealMatrix g_;
    std::string source_;
};

/// |G Omega - (G Omega)^T|_F: zero exactly for members of sp(2n, R).
double algebra_membership_residual(const RealMatrix& g);

/// Assembles A from mode-operator terms via the quadrature dictionary.
QuadraticHamiltonian from_terms(ModeCount n, std::span<const HamiltonianTerm> terms,
                                std::string label = {});

SymplecticGenerator generator(const QuadraticHamiltonian& h);

/// The Hamiltonian C with [iH1, iH2] = i (1/2 R^T C R), C = A2 Omega A1 - A1 Omega A2.
/// Its generator equals commutator(generator(h1), generator(h2)).
QuadraticHamiltonian bracket_hamiltonians(const QuadraticHamiltonian& h1,
                                          const QuadraticHamiltonian& h2);

/// Positive definiteness by smallest eigenvalue, relative to the spectral norm of A.
bool is_positive_definite(const QuadraticHamiltonian& h, double tol = 1e-10);

/// Throws DefinitenessError naming the smallest eigenvalue unless `h` is positive definite.
void require_positive_definite(const QuadraticHamiltonian& h, double tol = 1e-10);

}  // namespace quadctl

#endif  // QUADCTL_HAMILTONIAN_HPP
