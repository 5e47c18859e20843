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
// Reference computations for the test suites. Each oracle takes a different route from
// the library code it checks.
#ifndef QUADCTL_TESTS_ORACLES_HPP
#define QUADCTL_TESTS_ORACLES_HPP

#include "quadctl/hamiltonian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using quadctl::RealMatrix;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Omega assembled entry by entry.
inline RealMatrix omega(int n) {
    RealMatrix w = RealMatrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        w(2 * j, 2 * j + 1) = 1.0;
        w(2 * j + 1, 2 * j) = -1.0;
    }
    return w;
}

// Scaling-and-squaring Taylor exponential.
inline RealMatrix expm_taylor(const RealMatrix& m) {
    const double norm = m.lpNorm<1>();
    int squarings = 0;
    if (norm > 0.25) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    }
    const RealMatrix x = m / std::ldexp(1.0, squarings);
    RealMatrix term = RealMatrix::Identity(m.rows(), m.cols());
    RealMatrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

// Rank of a set of matrices from the singular values of the stacked vectorizations.
inline int span_rank(const std::vector<RealMatrix>& ms, double rel_tol = 1e-8) {
    if (ms.empty()) return 0;
    const auto d = ms.front().size();
    RealMatrix stacked(d, static_cast<Eigen::Index>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i) {
        stacked.col(static_cast<Eigen::Index>(i)) =
            Eigen::Map<const Eigen::VectorXd>(ms[i].data(), d) / ms[i].norm();
    }
    Eigen::JacobiSVD<RealMatrix> svd(stacked);
    const auto& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_tol * s(0)) ++r;
    }
    return r;
}

// Brute-force Lie closure dimension: bracket every pair of the current span basis until
// the rank stops growing. The basis is re-extracted from an SVD each pass.
inline int closure_dimension(const std::vector<RealMatrix>& seeds, double rel_tol = 1e-8) {
    std::vector<RealMatrix> basis;
    for (const auto& s : seeds) {
        if (s.norm() > 0) basis.push_back(s / s.norm());
    }
    int rank = span_rank(basis, rel_tol);
    for (int pass = 0; pass < 64; ++pass) {
        std::vector<RealMatrix> grown = basis;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                RealMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
                if (c.norm() > 1e-12) grown.push_back(c / c.norm());
            }
        }
        const int next = span_rank(grown, rel_tol);
        const auto d = grown.front().size();
        RealMatrix stacked(d, static_cast<Eigen::Index>(grown.size()));
        for (std::size_t i = 0; i < grown.size(); ++i) {
            stacked.col(static_cast<Eigen::Index>(i)) =
                Eigen::Map<const Eigen::VectorXd>(grown[i].data(), d);
        }
        Eigen::JacobiSVD<RealMatrix> svd(stacked, Eigen::ComputeThinU);
        basis.clear();
        for (int k = 0; k < next; ++k) {
            RealMatrix m = Eigen::Map<const RealMatrix>(svd.matrixU().col(k).data(),
                                                        seeds.front().rows(),
                                                        seeds.front().cols());
            basis.push_back(m);
        }
        if (next == rank) return rank;
        rank = next;
    }
    return rank;
}

// Quadratic mode-operator expressions, expanded to A through a = (q + i p) / sqrt 2.
// A term c * X_j Y_k with X, Y in {a, a^dag}.
struct LadderTerm {
    Complex coeff;
    bool dag_first;
    int first;  // 1-based mode
    bool dag_second;
    int second;
};

inline Eigen::VectorXcd ladder_vector(int n, bool dag, int mode) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * n);
    const double r = 1.0 / std::sqrt(2.0);
    v(2 * (mode - 1)) = r;
    v(2 * (mode - 1) + 1) = dag ? Complex(0, -r) : Complex(0, r);
    return v;
}

// Writes the expression as Z = R^T M R (+ constant) and returns A = -2 i sym(M), the
// real symmetric matrix with Z = i (1/2) R^T A R. Throws if A is not real.
inline RealMatrix expression_to_a(int n, const std::vector<LadderTerm>& terms) {
    ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
    for (const auto& t : terms) {
        m += t.coeff * ladder_vector(n, t.dag_first, t.first) *
             ladder_vector(n, t.dag_second, t.second).transpose();
    }
    const ComplexMatrix sym = 0.5 * (m + m.transpose());
    const ComplexMatrix a = Complex(0, -2) * sym;
    if (a.imag().norm() > 1e-14) {
        throw std::runtime_error("expression is not of the form i * Hermitian quadratic");
    }
    return a.real();
}

inline RealMatrix generator_of(const RealMatrix& a) {
    return -a * omega(static_cast<int>(a.rows() / 2));
}

// Symplectic eigenvalues from the spectrum of -(A Omega)^2, which is nu_k^2 twice each.
inline std::vector<double> symplectic_eigenvalues(const RealMatrix& a) {
    const RealMatrix m = a * omega(static_cast<int>(a.rows() / 2));
    const RealMatrix sq = -(m * m);
    Eigen::EigenSolver<RealMatrix> es(sq);
    std::vector<double> v;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        v.push_back(es.eigenvalues()(i).real());
    }
    std::sort(v.begin(), v.end());
    std::vector<double> nu;
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
        nu.push_back(std::sqrt(0.5 * (v[i] + v[i + 1])));
    }
    return nu;
}

// Random generators. Everything is seeded so failures reproduce.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    RealMatrix gaussian(int rows, int cols) {
        std::normal_distribution<double> nd;
        RealMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = nd(rng_);
        return m;
    }

    RealMatrix orthogonal(int d) {
        Eigen::HouseholderQR<RealMatrix> qr(gaussian(d, d));
        return qr.householderQ();
    }

    RealMatrix symmetric(int d) {
        const RealMatrix g = gaussian(d, d);
        return 0.5 * (g + g.transpose());
    }

    // Eigenvalues log-uniform in [1, cond].
    RealMatrix positive_definite(int d, double cond) {
        const RealMatrix q = orthogonal(d);
        Eigen::VectorXd lam(d);
        for (int i = 0; i < d; ++i) lam(i) = std::pow(cond, uniform(0.0, 1.0));
        lam(0) = 1.0;
        lam(d - 1) = cond;
        RealMatrix a = q * lam.asDiagonal() * q.transpose();
        return 0.5 * (a + a.transpose());
    }

    // exp of a random sp(2n) element with a bounded norm.
    RealMatrix symplectic(int n, double scale) {
        const RealMatrix a = symmetric(2 * n);
        const RealMatrix g = generator_of(a);
        return expm_taylor(g * (scale / g.norm()));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // QUADCTL_TESTS_ORACLES_HPP
