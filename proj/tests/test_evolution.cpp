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
#include "quadctl/evolution.hpp"
#include "quadctl/williamson.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace {

using namespace quadctl;

ControlModel chain3() {
    ChainSpec spec;
    spec.n = 3;
    return build_chain(spec);
}

ControlSchedule random_schedule(oracle::Gen& gen, int segments, int controls) {
    std::vector<ControlSegment> segs;
    for (int s = 0; s < segments; ++s) {
        ControlSegment seg{gen.uniform(0.01, 0.3), {}};
        for (int c = 0; c < controls; ++c) seg.f.push_back(gen.uniform(-1.0, 1.0));
        segs.push_back(std::move(seg));
    }
    return ControlSchedule(std::move(segs));
}

// sigma = S0 diag(nu) S0^T with nu >= 1/2 is a physical covariance.
RealMatrix random_physical_covariance(oracle::Gen& gen, int n) {
    RealMatrix d = RealMatrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = gen.uniform(0.5, 3.0);
    const RealMatrix s = gen.symplectic(n, 0.7);
    const RealMatrix sigma = s * d * s.transpose();
    return 0.5 * (sigma + sigma.transpose());
}

TEST(Propagate, EmptyScheduleIsIdentity) {
    EXPECT_EQ(propagate(chain3(), ControlSchedule{}), RealMatrix::Identity(6, 6));
}

TEST(Propagate, DriftOnlySegmentMatchesExponential) {
    const ControlModel m = chain3();
    const ControlSchedule sched({{0.8, {0.0, 0.0}}});
    const RealMatrix want = oracle::expm_taylor(oracle::generator_of(m.drift().matrix()) * 0.8);
    EXPECT_LT((propagate(m, sched) - want).norm(), 1e-12);
}

TEST(Propagate, LaterSegmentsActAfterEarlierOnes) {
    const ControlModel m = chain3();
    const ControlSchedule sched({{0.3, {1.0, 0.0}}, {0.5, {0.0, -1.0}}});
    const RealMatrix s1 = oracle::expm_taylor(oracle::generator_of(m.matrix_at(std::vector{1.0, 0.0})) * 0.3);
    const RealMatrix s2 = oracle::expm_taylor(oracle::generator_of(m.matrix_at(std::vector{0.0, -1.0})) * 0.5);
    EXPECT_LT((propagate(m, sched) - s2 * s1).norm(), 1e-12);
}

TEST(PropagateProperty, RandomSchedulesAreSymplecticAndConcatenate) {
    oracle::Gen gen(51);
    const ControlModel m = chain3();
    for (int trial = 0; trial < 30; ++trial) {
        const ControlSchedule a = random_schedule(gen, 20, 2);
        const ControlSchedule b = random_schedule(gen, gen.integer(1, 10), 2);
        const RealMatrix sa = propagate(m, a);
        EXPECT_LT(audit_symplecticity(sa), 1e-9);
        const RealMatrix sab = propagate(m, a.then(b));
        EXPECT_LT((sab - propagate(m, b) * sa).norm(), 1e-10);
    }
}

TEST(Schedule, ValidatesSegments) {
    EXPECT_THROW(ControlSchedule(std::vector<ControlSegment>{{0.0, {1.0}}}), InvalidArgumentError);
    EXPECT_THROW(ControlSchedule(std::vector<ControlSegment>{{-1.0, {1.0}}}), InvalidArgumentError);
    EXPECT_THROW(ControlSchedule(std::vector<ControlSegment>{{1.0, {std::numeric_limits<double>::quiet_NaN()}}}),
                 InvalidArgumentError);
    EXPECT_THROW(propagate(chain3(), ControlSchedule(std::vector<ControlSegment>{{1.0, {1.0}}})), InvalidArgumentError);
}

TEST(Covariance, VacuumIsPhysicalAndTightlySo) {
    const CovarianceState vac(0.5 * RealMatrix::Identity(4, 4), true);
    EXPECT_NEAR(vac.uncertainty_margin(), 0.0, 1e-15);
}

TEST(Covariance, SubVacuumIsRejected) {
    EXPECT_THROW(CovarianceState(0.2 * RealMatrix::Identity(2, 2), true), InvalidArgumentError);
    EXPECT_NO_THROW(CovarianceState(0.2 * RealMatrix::Identity(2, 2), false));
    RealMatrix asym = RealMatrix::Identity(2, 2);
    asym(0, 1) = 0.3;
    EXPECT_THROW(CovarianceState{asym}, InvalidArgumentError);
}

TEST(Covariance, SqueezedVacuumIsPhysical) {
    RealMatrix sq = RealMatrix::Zero(2, 2);
    sq(0, 0) = 0.5 * 0.1;
    sq(1, 1) = 0.5 / 0.1;
    EXPECT_NO_THROW(CovarianceState(sq, true));
}

TEST(CovarianceProperty, EvolutionPreservesSymplecticEigenvalues) {
    oracle::Gen gen(52);
    const ControlModel m = chain3();
    for (int trial = 0; trial < 20; ++trial) {
        const CovarianceState state(random_physical_covariance(gen, 3), true);
        const RealMatrix s = propagate(m, random_schedule(gen, 20, 2));
        const CovarianceState out = evolve_covariance(state, s);
        EXPECT_GE(out.uncertainty_margin(), -1e-9);
        const auto before = symplectic_eigenvalues(QuadraticHamiltonian(state.sigma()));
        const auto after = symplectic_eigenvalues(QuadraticHamiltonian(out.sigma()));
        for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-7);
    }
}

TEST(Covariance, BeamSplitterSwapsHotMode) {
    const std::vector<HamiltonianTerm> hop = {HamiltonianTerm::hop(1, 2, 1.0)};
    const ControlModel m(QuadraticHamiltonian::zero(ModeCount(2)),
                         {from_terms(ModeCount(2), hop)});
    const RealMatrix s = propagate(m, ControlSchedule(std::vector<ControlSegment>{{std::numbers::pi / 2, {1.0}}}));
    RealMatrix sigma = RealMatrix::Zero(4, 4);
    sigma.diagonal() << 5.5, 5.5, 0.5, 0.5;
    const CovarianceState out = evolve_covariance(CovarianceState(sigma, true), s);
    RealMatrix want = RealMatrix::Zero(4, 4);
    want.diagonal() << 0.5, 0.5, 5.5, 5.5;
    EXPECT_LT((out.sigma() - want).norm(), 1e-12);
}

TEST(Covariance, EvolutionRejectsNonSymplecticMap) {
    const CovarianceState vac(0.5 * RealMatrix::Identity(2, 2));
    EXPECT_THROW(evolve_covariance(vac, 2.0 * RealMatrix::Identity(2, 2)), InvalidArgumentError);
    EXPECT_THROW(evolve_covariance(vac, RealMatrix::Identity(4, 4)), ShapeError);
}

}  // namespace
