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
#include "quadctl/chain.hpp"

#include "quadctl/operator_table.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace quadctl {
namespace {

void require_finite_param(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidArgumentError(std::string("chain: ") + name + " must be finite");
    }
}

// Operands of the identity chain. Raw generators are normalized to unit strength
// (iH0 / omega, iH1 / omega1, iH2 / chi); named operators are the tabulated forms.
struct Operands {
    RealMatrix h0, h1, h2;
    RealMatrix o1, o2, o3, ra, ta, tb, rb, sa1, sa2, p2, rb23, rbar12;

    RealMatrix br(const RealMatrix& x, const RealMatrix& y) const { return commutator(x, y); }
};

struct IdentityDef {
    const char* name;
    const char* statement;
    std::vector<double> coefficients;
    const char* rhs;
    std::function<double(const ChainSpec&)> scale;
    std::function<RealMatrix(const Operands&, const std::vector<double>&)> lhs;
};

double unit(const ChainSpec&) { return 1.0; }

// Expected scale of each identity relative to its tabulated operator. With unit
// strength site-1 controls the only parameter left is g~ = g / omega, entering O1.
// T_b comes out with the opposite sign of the tabulated i (a1^dag a2^dag + a1 a2).
const std::vector<IdentityDef>& identity_table() {
    static const std::vector<IdentityDef> defs = {
        {"S_a1", "1/2 [iH2, iH1] = a1^dag^2 - a1^2", {0.5}, "S_a1", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix { return c[0] * o.br(o.h2, o.h1); }},
        {"O1", "[iH0, iH1] = g~ (a1^dag a2^dag + a1^dag a2 - a1 a2^dag - a1 a2)", {1.0}, "O1",
         [](const ChainSpec& s) { return s.g1_renormalized(); },
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix { return c[0] * o.br(o.h0, o.h1); }},
        {"O2", "[iH1, O1] = i (a1^dag a2^dag + a1^dag a2 + a1 a2^dag + a1 a2)", {1.0}, "O2", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix { return c[0] * o.br(o.h1, o.o1); }},
        {"R_a12", "1/2 [([O1, iH0] + 2 O2), iH1] = a1^dag a2 - a1 a2^dag", {0.5, 1.0, 2.0},
         "R_a12", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return c[0] * o.br(c[1] * o.br(o.o1, o.h0) + c[2] * o.o2, o.h1);
         }},
        {"T_a12", "O1 - R_a12 = a1^dag a2^dag - a1 a2", {1.0, -1.0}, "T_a12", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return RealMatrix(c[0] * o.o1 + c[1] * o.ra);
         }},
        {"S_a2", "[T_a12, R_a12] + S_a1 = a2^dag^2 - a2^2", {1.0, 1.0}, "S_a2", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return RealMatrix(c[0] * o.br(o.ta, o.ra) + c[1] * o.sa1);
         }},
        {"T_b12", "[O1 - R_a12, iH1] = -i (a1^dag a2^dag + a1 a2)", {1.0, 1.0, -1.0}, "T_b12",
         [](const ChainSpec&) { return -1.0; },
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return c[0] * o.br(c[1] * o.o1 + c[2] * o.ra, o.h1);
         }},
        {"O3", "[iH1, O1 - 2 R_a12] = i (a1^dag a2^dag - a1^dag a2 - a1 a2^dag + a1 a2)",
         {1.0, 1.0, -2.0}, "O3", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return c[0] * o.br(o.h1, c[1] * o.o1 + c[2] * o.ra);
         }},
        {"R_b12", "1/2 (O2 - O3) = i (a1^dag a2 + a1 a2^dag)", {0.5, -0.5}, "R_b12", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return RealMatrix(c[0] * o.o2 + c[1] * o.o3);
         }},
        {"P2", "1/2 (2 iH1 + [R_b12, R_a12]) = i a2^dag a2", {0.5, 2.0, 1.0}, "P2", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return RealMatrix(c[0] * (c[1] * o.h1 + c[2] * o.br(o.rb, o.ra)));
         }},
        {"S_b2", "[P2, S_a2] = 2 i (a2^dag^2 + a2^2)", {1.0}, "S_b2",
         [](const ChainSpec&) { return 2.0; },
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix { return c[0] * o.br(o.p2, o.sa2); }},
        {"R_b13", "[i (a2^dag a3 + a2 a3^dag), a1 a2^dag - a1^dag a2] = i (a1^dag a3 + a1 a3^dag)",
         {1.0}, "R_b13", unit,
         [](const Operands& o, const std::vector<double>& c) -> RealMatrix {
             return c[0] * o.br(o.rb23, o.rbar12);
         }},
    };
    return defs;
}

}  // namespace

void ChainSpec::validate() const {
    if (n < 1) {
        throw InvalidArgumentError("chain: n must be >= 1");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw InvalidArgumentError("chain: omega must be positive and finite");
    }
    require_finite_param(g1, "g1");
    require_finite_param(g2, "g2");
    require_finite_param(omega1, "omega1");
    require_finite_param(chi, "chi");
}

std::vector<HamiltonianTerm> chain_drift_terms(const ChainSpec& spec) {
    std::vector<HamiltonianTerm> terms;
    for (int j = 1; j <= spec.n; ++j) {
        terms.push_back(HamiltonianTerm::number(j, spec.omega));
    }
    for (int j = 1; j < spec.n; ++j) {
        terms.push_back(HamiltonianTerm::hop(j, j + 1, spec.g1));
        terms.push_back(HamiltonianTerm::pair(j, j + 1, spec.g2));
    }
    return terms;
}

ControlModel build_chain(const ChainSpec& spec, ChainControls controls) {
    spec.validate();
    const ModeCount n(spec.n);
    const std::vector<HamiltonianTerm> drift_terms = chain_drift_terms(spec);
    const std::vector<HamiltonianTerm> h1 = {HamiltonianTerm::number(1, spec.omega1)};
    const std::vector<HamiltonianTerm> h2 = {HamiltonianTerm::squeeze(1, spec.chi)};

    std::vector<QuadraticHamiltonian> ctrl;
    ctrl.push_back(from_terms(n, h1, "H1"));
    if (controls == ChainControls::rotation_and_squeezing) {
        ctrl.push_back(from_terms(n, h2, "H2"));
    }
    return ControlModel(from_terms(n, drift_terms, "H0"), std::move(ctrl));
}

PositivityResult positivity_condition(const ChainSpec& spec) {
    spec.validate();
    const ControlModel model = build_chain(spec);
    PositivityResult out;
    const double g1 = spec.g1_renormalized();
    const double g2 = spec.g2_renormalized();
    out.sufficient = g1 > 0.0 && g2 > 0.0 && g1 + g2 < 0.5;
    out.min_eigenvalue = model.drift().smallest_eigenvalue();
    out.actual = out.min_eigenvalue > 0.0;
    return out;
}

std::array<QuadraticHamiltonian, 3> positive_triple(const ChainSpec& spec, const TripleParams& p) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (!(p.alpha * spec.omega1 > 0.0)) {
        throw TripleError("triple: alpha * omega1 must be positive", "H0 + alpha H1", nan);
    }
    if (!(p.delta * spec.chi > 0.0)) {
        throw TripleError("triple: delta * chi must be positive", "H0 + beta H1 + delta H2", nan);
    }
    if (!(p.delta * spec.chi < p.beta * spec.omega1)) {
        throw TripleError("triple: delta * chi must be below beta * omega1",
                          "H0 + beta H1 + delta H2", nan);
    }
    const ControlModel model = build_chain(spec);
    const QuadraticHamiltonian& h0 = model.drift();
    const QuadraticHamiltonian& h1 = model.controls()[0];
    const QuadraticHamiltonian& h2 = model.controls()[1];
    std::array<QuadraticHamiltonian, 3> triple = {
        h0.relabeled("H0"),
        (h0 + p.alpha * h1).relabeled("H0 + alpha H1"),
        (h0 + p.beta * h1 + p.delta * h2).relabeled("H0 + beta H1 + delta H2"),
    };
    for (const auto& h : triple) {
        if (!is_positive_definite(h)) {
            const double lambda = h.smallest_eigenvalue();
            std::ostringstream os;
            os.precision(17);
            os << "triple: " << h.label() << " is not positive definite (smallest eigenvalue "
               << lambda << ")";
            throw TripleError(os.str(), h.label(), lambda);
        }
    }
    return triple;
}

std::vector<std::size_t> supplemental_identity_shape() {
    std::vector<std::size_t> out;
    for (const auto& def : identity_table()) {
        out.push_back(def.coefficients.size());
    }
    return out;
}

IdentityReport verify_supplemental_identities(const ChainSpec& spec, double tol,
                                              std::optional<IdentityMutation> mutation) {
    spec.validate();
    if (spec.n < 3) {
        throw InvalidArgumentError("identity verification needs n >= 3 (the long-distance "
                                   "bracket spans three sites), got n = " +
                                   std::to_string(spec.n));
    }
    if (spec.g1 != spec.g2) {
        throw InvalidArgumentError("identity verification covers the g1 == g2 (q_j q_j+1 "
                                   "coupling) case only");
    }
    if (spec.omega1 == 0.0 || spec.chi == 0.0) {
        throw InvalidArgumentError("identity verification needs nonzero omega1 and chi");
    }
    const auto& defs = identity_table();
    if (mutation && (mutation->identity >= defs.size() ||
                     mutation->coefficient >= defs[mutation->identity].coefficients.size())) {
        throw InvalidArgumentError("identity mutation index out of range");
    }

    const ModeCount n(spec.n);
    const ControlModel model = build_chain(spec);
    Operands o;
    o.h0 = generator(model.drift()).matrix() / spec.omega;
    o.h1 = generator(model.controls()[0]).matrix() / spec.omega1;
    o.h2 = generator(model.controls()[1]).matrix() / spec.chi;
    o.o1 = operator_form("O1").generator(n);
    o.o2 = operator_form("O2").generator(n);
    o.o3 = operator_form("O3").generator(n);
    o.ra = operator_form("R_a12").generator(n);
    o.ta = operator_form("T_a12").generator(n);
    o.tb = operator_form("T_b12").generator(n);
    o.rb = operator_form("R_b12").generator(n);
    o.sa1 = operator_form("S_a1").generator(n);
    o.sa2 = operator_form("S_a2").generator(n);
    o.p2 = operator_form("P2").generator(n);
    o.rb23 = operator_form("R_b23").generator(n);
    o.rbar12 = operator_form("Rbar_a12").generator(n);

    IdentityReport report;
    report.tol = tol;
    for (std::size_t i = 0; i < defs.size(); ++i) {
        const IdentityDef& def = defs[i];
        std::vector<double> coeffs = def.coefficients;
        if (mutation && mutation->identity == i) {
            coeffs[mutation->coefficient] *= mutation->factor;
        }
        IdentityRecord rec;
        rec.name = def.name;
        rec.statement = def.statement;
        rec.scale = def.scale(spec);
        rec.lhs = def.lhs(o, coeffs);
        rec.rhs = rec.scale * operator_form(def.rhs).generator(n);
        rec.residual = (rec.lhs - rec.rhs).norm();
        report.max_residual = std::max(report.max_residual, rec.residual);
        report.records.push_back(std::move(rec));
    }
    report.all_pass = report.max_residual <= tol;
    return report;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::controllable: return "CONTROLLABLE";
        case Verdict::rank_only: return "RANK_ONLY";
        case Verdict::not_established: return "NOT_ESTABLISHED";
    }
    return "UNKNOWN";
}

ControllabilityReport controllability_report(const ChainSpec& spec, const TripleParams& p,
                                             double tol, ChainControls controls) {
    ControllabilityReport out;
    out.spec = spec;
    out.triple_params = p;
    out.controls = controls;
    out.tol = tol;

    const ControlModel model = build_chain(spec, controls);
    std::vector<SymplecticGenerator> seeds = {generator(model.drift())};
    for (const auto& c : model.controls()) {
        seeds.push_back(generator(c));
    }
    const LieSubspace sub = closure(seeds, tol);
    out.rank = rank_criterion(sub);
    out.closed = sub.closed();
    out.bracket_depth = sub.bracket_depth_reached();
    if (!out.rank.rank_criterion_met) {
        out.passive = passivity_check(sub, std::max(tol, 1e-9));
    }
    out.positivity = positivity_condition(spec);

    if (controls == ChainControls::rotation_and_squeezing) {
        try {
            const auto triple = positive_triple(spec, p);
            std::vector<SymplecticGenerator> triple_seeds;
            for (std::size_t i = 0; i < triple.size(); ++i) {
                out.triple_min_eigenvalues[i] = triple[i].smallest_eigenvalue();
                triple_seeds.push_back(generator(triple[i]));
            }
            out.triple_closure_dimension = closure(triple_seeds, tol).dimension();
            out.triple_valid = out.triple_closure_dimension == out.rank.dimension_found;
            if (!out.triple_valid) {
                out.triple_failure = "triple closure dimension differs from control closure";
            }
        } catch (const TripleError& e) {
            out.triple_failure = e.what();
        }
    } else {
        out.triple_failure = "squeezing control unavailable";
    }

    if (out.rank.rank_criterion_met) {
        out.verdict = out.triple_valid ? Verdict::controllable : Verdict::rank_only;
    }
    return out;
}

}  // namespace quadctl
