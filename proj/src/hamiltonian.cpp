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
#include "quadctl/hamiltonian.hpp"

#include "quadctl/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quadctl {
namespace {

constexpr double kSymmetryTol = 1e-12;

int q_index(int mode) { return 2 * (mode - 1); }
int p_index(int mode) { return 2 * (mode - 1) + 1; }

void check_mode(ModeCount n, int mode, TermKind kind) {
    if (mode < 1 || mode > n.modes()) {
        std::ostringstream os;
        os << to_string(kind) << " term: mode index " << mode << " outside [1, " << n.modes()
           << "]";
        throw InvalidArgumentError(os.str());
    }
}

void add_symmetric(RealMatrix& a, int r, int c, double v) {
    a(r, c) += v;
    if (r != c) {
        a(c, r) += v;
    }
}

}  // namespace

HamiltonianTerm HamiltonianTerm::number(int j, double omega) {
    return {TermKind::number, j, 0, omega, {}};
}
HamiltonianTerm HamiltonianTerm::hop(int j, int k, double g) {
    return {TermKind::hop, j, k, g, {}};
}
HamiltonianTerm HamiltonianTerm::pair(int j, int k, double g) {
    return {TermKind::pair, j, k, g, {}};
}
HamiltonianTerm HamiltonianTerm::squeeze(int j, double chi) {
    return {TermKind::squeeze, j, 0, chi, {}};
}
HamiltonianTerm HamiltonianTerm::generic(RealMatrix fragment) {
    return {TermKind::generic, 0, 0, 1.0, std::move(fragment)};
}

std::string_view to_string(TermKind kind) {
    switch (kind) {
        case TermKind::number: return "number";
        case TermKind::hop: return "hop";
        case TermKind::pair: return "pair";
        case TermKind::squeeze: return "squeeze";
        case TermKind::generic: return "generic";
    }
    return "unknown";
}

QuadraticHamiltonian::QuadraticHamiltonian(RealMatrix a, std::string label)
    : modes_(modes_of(a)), label_(std::move(label)) {
    require_finite(a, "Hamiltonian matrix");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTol * scale) {
        std::ostringstream os;
        os << "Hamiltonian matrix is not symmetric (max asymmetry " << asym << ")";
        throw InvalidArgumentError(os.str());
    }
    a_ = 0.5 * (a + a.transpose());
}

QuadraticHamiltonian QuadraticHamiltonian::zero(ModeCount n, std::string label) {
    return QuadraticHamiltonian(RealMatrix::Zero(n.dimension(), n.dimension()),
                                std::move(label));
}

QuadraticHamiltonian QuadraticHamiltonian::relabeled(std::string label) const {
    QuadraticHamiltonian copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

double QuadraticHamiltonian::smallest_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

QuadraticHamiltonian operator+(const QuadraticHamiltonian& lhs, const QuadraticHamiltonian& rhs) {
    if (lhs.modes() != rhs.modes()) {
        throw ShapeError("cannot add Hamiltonians on different mode counts");
    }
    return QuadraticHamiltonian(lhs.a_ + rhs.a_);
}

QuadraticHamiltonian operator*(double c, const QuadraticHamiltonian& h) {
    return QuadraticHamiltonian(c * h.a_);
}

double algebra_membership_residual(const RealMatrix& g) {
    const RealMatrix a = g * symplectic_form(modes_of(g));
    return (a - a.transpose()).norm();
}

SymplecticGenerator::SymplecticGenerator(RealMatrix g, std::string source, double tol)
    : modes_(modes_of(g)), g_(std::move(g)), source_(std::move(source)) {
    require_finite(g_, "generator");
    const double residual = algebra_membership_residual(g_);
    if (residual > tol * std::max(1.0, g_.norm())) {
        std::ostringstream os;
        os << "matrix is not in sp(2n,R): |G Omega - (G Omega)^T| = " << residual;
        throw InvalidArgumentError(os.str());
    }
}

QuadraticHamiltonian SymplecticGenerator::hamiltonian() const {
    // G = -A Omega and Omega^2 = -1, so A = G Omega.
    const RealMatrix a = g_ * symplectic_form(modes_);
    return QuadraticHamiltonian(0.5 * (a + a.transpose()), source_);
}

QuadraticHamiltonian from_terms(ModeCount n, std::span<const HamiltonianTerm> terms,
                                std::string label) {
    RealMatrix a = RealMatrix::Zero(n.dimension(), n.dimension());
    for (const HamiltonianTerm& term : terms) {
        if (term.kind != TermKind::generic && !std::isfinite(term.coeff)) {
            throw InvalidArgumentError(std::string(to_string(term.kind)) +
                                       " term: coefficient is not finite");
        }
        switch (term.kind) {
            case TermKind::number:
                // w a^dag a = w (q^2 + p^2)/2 - w/2; the constant is dropped.
                check_mode(n, term.j, term.kind);
                a(q_index(term.j), q_index(term.j)) += term.coeff;
                a(p_index(term.j), p_index(term.j)) += term.coeff;
                break;
            case TermKind::hop:
            case TermKind::pair: {
                check_mode(n, term.j, term.kind);
                check_mode(n, term.k, term.kind);
                if (term.j == term.k) {
                    throw InvalidArgumentError(std::string(to_string(term.kind)) +
                                               " term: modes must differ");
                }
                // hop:  g (a_j a_k^dag + h.c.) = g (q_j q_k + p_j p_k)
                // pair: g (a_j a_k + h.c.)     = g (q_j q_k - p_j p_k)
                const double p_sign = term.kind == TermKind::hop ? 1.0 : -1.0;
                add_symmetric(a, q_index(term.j), q_index(term.k), term.coeff);
                add_symmetric(a, p_index(term.j), p_index(term.k), p_sign * term.coeff);
                break;
            }
            case TermKind::squeeze:
                // x (a^2 + a^dag^2) = x (q^2 - p^2)
                check_mode(n, term.j, term.kind);
                a(q_index(term.j), q_index(term.j)) += 2.0 * term.coeff;
                a(p_index(term.j), p_index(term.j)) -= 2.0 * term.coeff;
                break;
            case TermKind::generic:
                if (term.fragment.rows() != n.dimension() ||
                    term.fragment.cols() != n.dimension()) {
                    throw ShapeError("generic term: fragment must be " +
                                     std::to_string(n.dimension()) + "x" +
                                     std::to_string(n.dimension()));
                }
                // Validates symmetry and finiteness.
                a += QuadraticHamiltonian(term.fragment).matrix();
                break;
        }
    }
    return QuadraticHamiltonian(std::move(a), std::move(label));
}

SymplecticGenerator generator(const QuadraticHamiltonian& h) {
    return SymplecticGenerator(-h.matrix() * symplectic_form(h.modes()), h.label());
}

QuadraticHamiltonian bracket_hamiltonians(const QuadraticHamiltonian& h1,
                                          const QuadraticHamiltonian& h2) {
    if (h1.modes() != h2.modes()) {
        throw ShapeError("bracket_hamiltonians: mode counts differ");
    }
    const RealMatrix omega = symplectic_form(h1.modes());
    // (A2 Omega A1)^T = -A1 Omega A2, so C = M + M^T is exactly symmetric.
    const RealMatrix m = h2.matrix() * omega * h1.matrix();
    return QuadraticHamiltonian(m + m.transpose(),
                                "[" + h1.label() + "," + h2.label() + "]");
}

bool is_positive_definite(const QuadraticHamiltonian& h, double tol) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double spectral_norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return spectral_norm > 0.0 && ev(0) > tol * spectral_norm;
}

void require_positive_definite(const QuadraticHamiltonian& h, double tol) {
    if (!is_positive_definite(h, tol)) {
        const double lambda = h.smallest_eigenvalue();
        std::ostringstream os;
        os.precision(17);
        os << "Hamiltonian" << (h.label().empty() ? "" : " '" + h.label() + "'")
           << " is not positive definite: smallest eigenvalue " << lambda;
        throw DefinitenessError(os.str(), lambda);
    }
}

}  // namespace quadctl
