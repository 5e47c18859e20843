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
#include "oracles.hpp"
#include "quadctl/chain.hpp"
#include "quadctl/errors.hpp"
#include "quadctl/lie_closure.hpp"

#include <gtest/gtest.h>

namespace {

using namespace quadctl;

std::vector<SymplecticGenerator> generators_of(const std::vector<RealMatrix>& as) {
    std::vector<SymplecticGenerator> out;
    for (const auto& a : as) out.push_back(generator(QuadraticHamiltonian(a)));
    return out;
}

std::vector<RealMatrix> raw(const std::vector<SymplecticGenerator>& gs) {
    std::vector<RealMatrix> out;
    for (const auto& g : gs) out.push_back(g.matrix());
    return out;
}

std::vector<SymplecticGenerator> chain_generators(int n, const ChainSpec& base = {}) {
    ChainSpec spec = base;
    spec.n = n;
    const ControlModel m = build_chain(spec);
    std::vector<SymplecticGenerator> out = {generator(m.drift())};
    for (const auto& c : m.controls()) out.push_back(generator(c));
    return out;
}

RealMatrix term_matrix(int n, const HamiltonianTerm& t) {
    const std::vector<HamiltonianTerm> terms = {t};
    return from_terms(ModeCount(n), terms).matrix();
}

TEST(Closure, AlgebraDimensions) {
    EXPECT_EQ(symplectic_algebra_dimension(ModeCount(1)), 3);
    EXPECT_EQ(symplectic_algebra_dimension(ModeCount(6)), 78);
    EXPECT_EQ(passive_algebra_dimension(ModeCount(5)), 25);
}

TEST(Closure, SingleOscillatorRotationAndSqueezingSpanSp2) {
    const auto gens = generators_of(
        {term_matrix(1, HamiltonianTerm::number(1, 1.0)), term_matrix(1, HamiltonianTerm::squeeze(1, 1.0))});
    const LieSubspace sub = closure(gens);
    EXPECT_EQ(sub.dimension(), 3);
    EXPECT_TRUE(rank_criterion(sub).rank_criterion_met);
    EXPECT_TRUE(sub.closed());
    EXPECT_EQ(sub.bracket_depth_reached(), 1);
}

TEST(Closure, RepeatedGeneratorSpansLine) {
    const auto gens = generators_of({RealMatrix::Identity(2, 2), 3.0 * RealMatrix::Identity(2, 2)});
    const LieSubspace sub = closure(gens);
    EXPECT_EQ(sub.dimension(), 1);
    EXPECT_FALSE(rank_criterion(sub).rank_criterion_met);
    EXPECT_TRUE(sub.closed());
    EXPECT_TRUE(passivity_check(sub));
}

TEST(Closure, ZeroGeneratorsAreIgnored) {
    const auto gens = generators_of({RealMatrix::Zero(2, 2), RealMatrix::Identity(2, 2)});
    EXPECT_EQ(closure(gens).dimension(), 1);
}

TEST(Closure, RejectsBadInput) {
    EXPECT_THROW(closure({}), InvalidArgumentError);
    const auto gens = generators_of({RealMatrix::Identity(2, 2), RealMatrix::Identity(4, 4)});
    EXPECT_THROW(closure(gens), ShapeError);
    const auto one = generators_of({RealMatrix::Identity(2, 2)});
    EXPECT_THROW(closure(one, 0.0), InvalidArgumentError);
}

TEST(Closure, ChainMatchesBruteForceOracle) {
    for (int n = 2; n <= 4; ++n) {
        const auto gens = chain_generators(n);
        const LieSubspace sub = closure(gens);
        EXPECT_EQ(sub.dimension(), oracle::closure_dimension(raw(gens))) << n;
        EXPECT_EQ(sub.dimension(), n * (2 * n + 1)) << n;
    }
}

TEST(Closure, PassiveChainMatchesOracleAndStaysPassive) {
    for (int n = 2; n <= 4; ++n) {
        ChainSpec spec;
        spec.n = n;
        spec.g2 = 0.0;
        const ControlModel m = build_chain(spec, ChainControls::rotation_only);
        const auto gens = std::vector<SymplecticGenerator>{generator(m.drift()),
                                                           generator(m.controls().at(0))};
        const LieSubspace sub = closure(gens);
        EXPECT_EQ(sub.dimension(), oracle::closure_dimension(raw(gens))) << n;
        EXPECT_LE(sub.dimension(), n * n);
        EXPECT_TRUE(passivity_check(sub));
    }
}

TEST(ClosureProperty, RandomSeedsMatchOracle) {
    oracle::Gen gen(21);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = gen.integer(1, 3);
        std::vector<RealMatrix> as;
        const int count = gen.integer(1, 3);
        for (int k = 0; k < count; ++k) {
            // Sparse seeds so that proper subalgebras occur.
            RealMatrix a = RealMatrix::Zero(2 * n, 2 * n);
            const int i = gen.integer(0, 2 * n - 1);
            const int j = gen.integer(0, 2 * n - 1);
            a(i, j) = a(j, i) = gen.uniform(0.5, 2.0);
            as.push_back(a);
        }
        const auto gens = generators_of(as);
        EXPECT_EQ(closure(gens).dimension(), oracle::closure_dimension(raw(gens)))
            << "trial " << trial;
    }
}

TEST(ClosureProperty, RecombinationInvariance) {
    oracle::Gen gen(22);
    for (int n = 1; n <= 3; ++n) {
        const auto gens = chain_generators(n);
        const RealMatrix& a = gens[0].matrix();
        const RealMatrix& b = gens[1].matrix();
        const RealMatrix& c = gens[2].matrix();
        const double s = gen.uniform(0.5, 2.0);
        const std::vector<SymplecticGenerator> mixed = {
            SymplecticGenerator(a + s * b), SymplecticGenerator(a - b + c),
            SymplecticGenerator(2.0 * c - s * a)};
        EXPECT_EQ(closure(mixed).dimension(), closure(gens).dimension()) << n;
    }
}

TEST(ClosureProperty, StableUnderTighterTolerance) {
    for (int n = 1; n <= 4; ++n) {
        const auto gens = chain_generators(n);
        EXPECT_EQ(closure(gens, 1e-9).dimension(), closure(gens, 1e-10).dimension()) << n;
    }
    ChainSpec passive;
    passive.g2 = 0.0;
    for (int n = 2; n <= 4; ++n) {
        passive.n = n;
        const ControlModel m = build_chain(passive, ChainControls::rotation_only);
        const std::vector<SymplecticGenerator> gens = {generator(m.drift()),
                                                       generator(m.controls().at(0))};
        EXPECT_EQ(closure(gens, 1e-9).dimension(), closure(gens, 1e-10).dimension()) << n;
    }
}

TEST(ClosureProperty, SubspaceIsClosedUnderBrackets) {
    const auto gens = chain_generators(2);
    ChainSpec spec;
    spec.n = 3;
    spec.g2 = 0.0;
    const ControlModel m = build_chain(spec, ChainControls::rotation_only);
    const std::vector<SymplecticGenerator> passive = {generator(m.drift()),
                                                      generator(m.controls().at(0))};
    for (const auto* set : {&gens, &passive}) {
        const LieSubspace sub = closure(*set);
        for (const auto& x : sub.basis()) {
            EXPECT_TRUE(contains(sub, x));
            for (const auto& y : sub.basis()) {
                EXPECT_TRUE(contains(sub, SymplecticGenerator(commutator(x.matrix(), y.matrix())),
                                     1e-8));
            }
        }
    }
}

TEST(Closure, ContainsRejectsOutsideElement) {
    ChainSpec spec;
    spec.n = 2;
    spec.g2 = 0.0;
    const ControlModel m = build_chain(spec, ChainControls::rotation_only);
    const LieSubspace sub = closure(std::vector<SymplecticGenerator>{
        generator(m.drift()), generator(m.controls().at(0))});
    const SymplecticGenerator squeeze =
        generator(QuadraticHamiltonian(term_matrix(2, HamiltonianTerm::squeeze(1, 1.0))));
    EXPECT_FALSE(contains(sub, squeeze));
}

TEST(Closure, OrthonormalVectorsAreOrthonormal) {
    const LieSubspace sub = closure(chain_generators(3));
    const Eigen::MatrixXd& q = sub.orthonormal_vectors();
    EXPECT_EQ(q.cols(), sub.dimension());
    EXPECT_LT((q.transpose() * q - Eigen::MatrixXd::Identity(q.cols(), q.cols())).norm(), 1e-12);
    for (const auto& b : sub.basis()) EXPECT_NEAR(b.matrix().norm(), 1.0, 1e-14);
    EXPECT_EQ(sub.basis().front().source(), "H0");
}

TEST(Closure, RoundBudgetLimitsDepth) {
    const LieSubspace sub = closure(chain_generators(3), kDefaultClosureTol, 1);
    EXPECT_EQ(sub.bracket_depth_reached(), 1);
    EXPECT_FALSE(sub.closed());
    EXPECT_LT(sub.dimension(), 21);
}

TEST(Closure, SerialAndParallelAgreeExactly) {
    const auto gens = chain_generators(4);
    const LieSubspace a = closure(gens, kDefaultClosureTol, 0, Execution::serial);
    const LieSubspace b = closure(gens, kDefaultClosureTol, 0, Execution::parallel);
    ASSERT_EQ(a.dimension(), b.dimension());
    EXPECT_EQ(a.orthonormal_vectors(), b.orthonormal_vectors());
}

}  // namespace
