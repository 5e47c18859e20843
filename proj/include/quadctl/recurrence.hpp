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
#ifndef QUADCTL_RECURRENCE_HPP
#define QUADCTL_RECURRENCE_HPP

#include "quadctl/hamiltonian.hpp"
#include "quadctl/kernels.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace quadctl {

/// sqrt(2 sum_k |e^{-i nu_k t} - 1|^2): the distance of the diagonal propagator
/// E(t) from the identity.
double mode_distance(std::span<const double> nu, double t);

/// K = |W|_F |W^{-1}|_F for the diagonalizer W = V U of A Omega, where V is the
/// Williamson matrix and U the fixed unitary pairing of each 2x2 block.
double conditioning_bound(const QuadraticHamiltonian& h, double tol = 1e-10);

struct RecurrenceQuery {
    QuadraticHamiltonian hamiltonian;
    double epsilon = 0.1;
    double T = 0.0;
    std::optional<double> t_max;  // default 1e5 * 2 pi / nu_min
    int grid_points_per_period = 16;
};

struct RecurrenceResult {
    bool found = false;
    double tau = 0.0;
    double achieved_distance = 0.0;   // |e^{-A Omega tau} - 1|_F
    double mode_distance_at_tau = 0.0;
    double K = 0.0;
    double best_distance_seen = 0.0;  // smallest true distance evaluated
    double best_time_seen = 0.0;
    double t_max = 0.0;
    double grid_step = 0.0;
    std::int64_t grid_points_scanned = 0;
    int candidates_refined = 0;
    std::vector<double> nu;
};

/// Searches (T, t_max] for tau with |e^{-A Omega tau} - 1|_F < epsilon. A uniform grid
/// of mode distances filters candidates below epsilon / K; each run of candidates is
/// refined by golden-section minimization of the true distance. An exhausted horizon
/// gives found == false.
RecurrenceResult find_recurrence(const RecurrenceQuery& query,
                                 Execution exec = Execution::parallel);

struct WitnessResult {
    double min_distance = 0.0;
    double argmin = 0.0;
};

/// Minimum of |e^{-A Omega t} - 1|_F over t_k = k T / samples, k = 1..samples.
/// A need only be symmetric.
WitnessResult non_recurrence_witness(const QuadraticHamiltonian& h, double T, int samples);

}  // namespace quadctl

#endif  // QUADCTL_RECURRENCE_HPP
