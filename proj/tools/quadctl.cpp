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
#include "quadctl/commands.hpp"
#include "quadctl/model_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace quadctl;
using namespace quadctl::cli;

int emit(CommandResult result, double seconds, const std::string& out_path) {
    result.report["wall_time_seconds"] = seconds;
    const std::string text = format_json(result.report) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "quadctl: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << text;
    }
    if (result.report.contains("error")) {
        std::cerr << "quadctl: " << result.report["error"].value("message", "error") << "\n";
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controllability and recurrence analysis for quadratic bosonic Hamiltonians"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write the JSON report to this file")->capture_default_str();

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "Lie closure of drift and controls");
    rank_cmd->add_option("--model", rank.model_path, "Model JSON")->required();
    rank_cmd->add_option("--tol", rank.tol, "Relative Gram-Schmidt tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    rank_cmd->add_option("--max-rounds", rank.max_rounds, "Bracket rounds (0 selects default)")
        ->check(CLI::NonNegativeNumber);
    rank_cmd->add_option("--out", out_path, "Write the JSON report to this file");

    WilliamsonArgs will;
    auto* will_cmd = app.add_subcommand("williamson", "Symplectic normal form of a Hamiltonian");
    will_cmd->add_option("--model", will.model_path, "Model JSON")->required();
    will_cmd->add_option("--hamiltonian", will.hamiltonian, "Hamiltonian name (default: drift)");
    will_cmd->add_option("--tol", will.tol, "Relative definiteness tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    will_cmd->add_option("--out", out_path, "Write the JSON report to this file");

    RecurArgs recur;
    double t_max = 0.0;
    auto* recur_cmd = app.add_subcommand("recur", "Search for a recurrence time");
    recur_cmd->add_option("--model", recur.model_path, "Model JSON")->required();
    recur_cmd->add_option("--hamiltonian", recur.hamiltonian, "Hamiltonian name (default: drift)");
    recur_cmd->add_option("--epsilon", recur.epsilon, "Target distance to the identity")
        ->capture_default_str()->check(CLI::PositiveNumber);
    recur_cmd->add_option("--after", recur.T, "Earliest admissible time")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    auto* tmax_opt = recur_cmd->add_option("--t-max", t_max, "Search horizon")
        ->check(CLI::PositiveNumber);
    recur_cmd->add_option("--grid", recur.grid_points_per_period, "Grid points per fastest period")
        ->capture_default_str()->check(CLI::Range(8, 1 << 20));
    recur_cmd->add_option("--tol", recur.tol, "Relative definiteness tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    recur_cmd->add_option("--out", out_path, "Write the JSON report to this file");

    EvolveArgs evolve;
    auto* evolve_cmd = app.add_subcommand("evolve", "Propagate a piecewise-constant schedule");
    evolve_cmd->add_option("--model", evolve.model_path, "Model JSON")->required();
    evolve_cmd->add_option("--schedule", evolve.schedule_path, "Schedule JSON")->required();
    evolve_cmd->add_option("--tol", evolve.tol, "Relative symplecticity audit tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    evolve_cmd->add_flag("--check-physical", evolve.check_physical,
                         "Reject covariances violating the uncertainty relation");
    evolve_cmd->add_option("--out", out_path, "Write the JSON report to this file");

    ChainArgs chain;
    auto* chain_cmd = app.add_subcommand("chain", "Controllability report for the coupled chain");
    chain_cmd->add_option("--n", chain.spec.n, "Number of modes")->capture_default_str();
    chain_cmd->add_option("--omega", chain.spec.omega, "Mode frequency")->capture_default_str();
    chain_cmd->add_option("--g1", chain.spec.g1, "Hopping coupling")->capture_default_str();
    chain_cmd->add_option("--g2", chain.spec.g2, "Pairing coupling")->capture_default_str();
    chain_cmd->add_option("--omega1", chain.spec.omega1, "Rotation control scale")
        ->capture_default_str();
    chain_cmd->add_option("--chi", chain.spec.chi, "Squeezing control scale")->capture_default_str();
    chain_cmd->add_option("--alpha", chain.triple.alpha, "Triple weight on the drift")
        ->capture_default_str();
    chain_cmd->add_option("--beta", chain.triple.beta, "Triple weight on the rotation")
        ->capture_default_str();
    chain_cmd->add_option("--delta", chain.triple.delta, "Triple weight on the squeezing")
        ->capture_default_str();
    chain_cmd->add_flag("--rotation-only", chain.rotation_only, "Drop the squeezing control");
    chain_cmd->add_flag("--identities", chain.identities_requested,
                        "Verify the bracket identities (needs n >= 3, g1 == g2)");
    chain_cmd->add_option("--tol", chain.tol, "Relative Gram-Schmidt tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    chain_cmd->add_option("--identity-tol", chain.identity_tol, "Identity residual tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    chain_cmd->add_option("--out", out_path, "Write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    if (*rank_cmd) {
        result = cmd_rank(rank);
    } else if (*will_cmd) {
        result = cmd_williamson(will);
    } else if (*recur_cmd) {
        if (*tmax_opt) recur.t_max = t_max;
        result = cmd_recur(recur);
    } else if (*evolve_cmd) {
        result = cmd_evolve(evolve);
    } else {
        result = cmd_chain(chain);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(std::move(result), seconds, out_path);
}
