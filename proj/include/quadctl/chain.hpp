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
#ifndef QUADCTL_CHAIN_HPP
#define QUADCTL_CHAIN_HPP

#include "quadctl/errors.hpp"
#include "quadctl/evolution.hpp"
#include "quadctl/lie_closure.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quadctl {

/// Uniform oscillator chain with nearest-neighbour hopping g1 and pair coupling g2,
/// controlled by a phase rotation (omega1) and a squeezing term (chi) on site 1.
struct ChainSpec {
    int n = 2;
    double omega = 1.0;
    double g1 = 0.2;
    double g2 = 0.2;
    double omega1 = 1.0;
    double chi = 1.0;

    void validate() const;
    double g1_renormalized() const { return g1 / omega; }
    double g2_renormalized() const { return g2 / omega; }
};

/// Coefficients of the positive-definite generating set
/// H0, H0 + alpha H1, H0 + beta H1 + delta H2.
struct TripleParams {
    double alpha = 1.0;
    double beta = 1.0;
    double delta = 0.5;
};

/// Which site-1 controls are available.
enum class ChainControls { rotation_and_squeezing, rotation_only };

/// number(j, omega) on every site, hop(j, j+1, g1) and pair(j, j+1, g2) on every bond.
std::vector<HamiltonianTerm> chain_drift_terms(const ChainSpec& spec);

/// Drift from number(j, omega), hop(j, j+1, g1), pair(j, j+1, g2); controls
/// number(1, omega1) and squeeze(1, chi).
ControlModel build_chain(const ChainSpec& spec,
                         ChainControls controls = ChainControls::rotation_and_squeezing);

struct PositivityResult {
    bool sufficient = false;  // g1~ + g2~ < 1/2 with both positive
    bool actual = false;      // smallest eigenvalue of A0 > 0
    double min_eigenvalue = 0.0;
};

PositivityResult positivity_condition(const ChainSpec& spec);

/// Raised when the triple parameters violate their constraints or a combination is
/// numerically indefinite.
class TripleError : public Error {
public:
    TripleError(const std::string& what, std::string combination, double eigenvalue)
        : Error(what), combination_(std::move(combination)), eigenvalue_(eigenvalue) {}

    const std::string& combination() const noexcept { return combination_; }
    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    std::string combination_;
    double eigenvalue_;
};

/// Checks alpha omega1 > 0 and 0 < delta chi < beta omega1, builds the three
/// combinations and verifies each is positive definite.
std::array<QuadraticHamiltonian, 3> positive_triple(const ChainSpec& spec, const TripleParams& p);

struct IdentityRecord {
    std::string name;
    std::string statement;
    RealMatrix lhs;        // evaluated bracket expression
    RealMatrix rhs;        // expected scale times the tabulated operator
    double scale = 1.0;
    double residual = 0.0; // |lhs - rhs|_F
};

struct IdentityReport {
    std::vector<IdentityRecord> records;
    bool all_pass = false;
    double max_residual = 0.0;
    double tol = 0.0;
};

/// Perturbs one stated coefficient of one identity (indices into the identity table
/// and into that identity's coefficient list).
struct IdentityMutation {
    std::size_t identity = 0;
    std::size_t coefficient = 0;
    double factor = 1.01;
};

/// Number of identities checked and the coefficient count of each.
std::vector<std::size_t> supplemental_identity_shape();

/// Evaluates the two-site commutator chain on sites 1-2 and the long-distance bracket
/// on sites 1-3. Requires n >= 3 and g1 == g2.
IdentityReport verify_supplemental_identities(const ChainSpec& spec, double tol = 1e-12,
                                              std::optional<IdentityMutation> mutation = {});

enum class Verdict { controllable, rank_only, not_established };

std::string_view to_string(Verdict v);

struct ControllabilityReport {
    ChainSpec spec;
    TripleParams triple_params;
    ChainControls controls = ChainControls::rotation_and_squeezing;
    double tol = 0.0;
    RankReport rank;
    bool closed = false;
    int bracket_depth = 0;
    std::optional<bool> passive;  // set when the rank criterion fails
    PositivityResult positivity;
    bool triple_valid = false;
    std::string triple_failure;
    std::array<double, 3> triple_min_eigenvalues{};
    int triple_closure_dimension = 0;
    Verdict verdict = Verdict::not_established;
};

ControllabilityReport controllability_report(
    const ChainSpec& spec, const TripleParams& p, double tol = kDefaultClosureTol,
    ChainControls controls = ChainControls::rotation_and_squeezing);

}  // namespace quadctl

#endif  // QUADCTL_CHAIN_HPP
