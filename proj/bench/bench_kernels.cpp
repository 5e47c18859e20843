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
#include "quadctl/kernels.hpp"
#include "quadctl/lie_closure.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace quadctl;

void grid_scan(benchmark::State& state, Execution exec) {
    const std::vector<double> nu = {0.66, 1.0, 1.25, 1.41};
    std::vector<double> out(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        kernels::mode_distance_grid(exec, nu, 0.01, 1, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void brackets(benchmark::State& state, Execution exec) {
    const int dim = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    auto random = [&] {
        RealMatrix m(dim, dim);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = nd(rng);
        return m;
    };
    std::vector<RealMatrix> left, right;
    for (int i = 0; i < 32; ++i) left.push_back(random());
    for (int i = 0; i < 3; ++i) right.push_back(random());
    for (auto _ : state) {
        auto out = kernels::bracket_batch(exec, left, right);
        benchmark::DoNotOptimize(out.data());
    }
}

void chain_closure(benchmark::State& state, Execution exec) {
    const ControlModel m = build_chain(ChainSpec{static_cast<int>(state.range(0))});
    const std::vector<SymplecticGenerator> gens = {
        generator(m.drift()), generator(m.controls()[0]), generator(m.controls()[1])};
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(gens, kDefaultClosureTol, 0, exec).dimension());
    }
}

}  // namespace

BENCHMARK_CAPTURE(grid_scan, serial, Execution::serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(grid_scan, parallel, Execution::parallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(brackets, serial, Execution::serial)->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(brackets, parallel, Execution::parallel)->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(chain_closure, serial, Execution::serial)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(chain_closure, parallel, Execution::parallel)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
