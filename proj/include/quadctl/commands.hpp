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
#ifndef QUADCTL_COMMANDS_HPP
#define QUADCTL_COMMANDS_HPP

#include "quadctl/chain.hpp"
#include "quadctl/lie_closure.hpp"
#include "quadctl/williamson.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace quadctl::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolName = "quadctl";
inline constexpr const char* kToolVersion = "0.1.0";

struct CommandResult {
    int exit_code = kExitSuccess;
    nlohmann::json report;
};

struct RankArgs {
    std::string model_path;
    double tol = kDefaultClosureTol;
    int max_rounds = 0;
};

struct WilliamsonArgs {
    std::string model_path;
    std::string hamiltonian;  // empty selects the drift
    double tol = kDefiniteTol;
};

struct RecurArgs {
    std::string model_path;
    std::string hamiltonian;
    double epsilon = 0.1;
    double T = 0.0;
    std::optional<double> t_max;
    int grid_points_per_period = 16;
    double tol = kDefiniteTol;
};

struct EvolveArgs {
    std::string model_path;
    std::string schedule_path;
    double tol = 1e-9;  // relative symplecticity audit threshold
    bool check_physical = false;
};

struct ChainArgs {
    ChainSpec spec;
    TripleParams triple;
    bool rotation_only = false;
    bool identities_requested = false;
    double tol = kDefaultClosureTol;
    double identity_tol = 1e-12;
};

/// Each command returns its report and exit status; wall time is added by the caller.
/// Input errors yield kExitUsage and definiteness failures kExitNegative, with an
/// "error" object in the report.
CommandResult cmd_rank(const RankArgs& args);
CommandResult cmd_williamson(const WilliamsonArgs& args);
CommandResult cmd_recur(const RecurArgs& args);
CommandResult cmd_evolve(const EvolveArgs& args);
CommandResult cmd_chain(const ChainArgs& args);

/// Hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace quadctl::cli

#endif  // QUADCTL_COMMANDS_HPP
