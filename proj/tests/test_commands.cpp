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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace {

using namespace quadctl;
using namespace quadctl::cli;
namespace fs = std::filesystem;

const fs::path kModels = QUADCTL_SOURCE_DIR "/models";
const fs::path kData = QUADCTL_SOURCE_DIR "/tests/data";

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("quadctl_test_" + name);
    std::ofstream(p) << text;
    return p;
}

// Report with the wall-time field removed, serialized.
std::string stable(const CommandResult& r) { return format_json(r.report); }

TEST(Commands, Sha256KnownVector) {
    EXPECT_EQ(sha256_hex("abc"),
              "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Commands, RankOnChainShorthand) {
    const CommandResult r = cmd_rank({(kModels / "chain_n2.json").string()});
    EXPECT_EQ(r.exit_code, kExitSuccess);
    EXPECT_EQ(r.report["results"]["dimension_found"], 10);
    EXPECT_EQ(r.report["command"], "rank");
    EXPECT_EQ(r.report["tolerances"]["closure_relative"], kDefaultClosureTol);
    EXPECT_EQ(r.report["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
}

TEST(Commands, RankNotMetIsNegative) {
    const CommandResult r = cmd_rank({(kModels / "single_control.json").string()});
    EXPECT_EQ(r.exit_code, kExitNegative);
    EXPECT_EQ(r.report["results"]["dimension_found"], 1);
    EXPECT_EQ(r.report["results"]["passive"], true);
}

TEST(Commands, MalformedModelIsUsageError) {
    const CommandResult r = cmd_rank({(kData / "bad_kind.json").string()});
    EXPECT_EQ(r.exit_code, kExitUsage);
    EXPECT_EQ(r.report["error"]["where"], "/hamiltonians/0/terms/0/kind");
    EXPECT_EQ(cmd_rank({"/nonexistent/model.json"}).exit_code, kExitUsage);
}

TEST(Commands, WilliamsonIdentityAndIndefinite) {
    const CommandResult ok = cmd_williamson({(kModels / "identity_n2.json").string()});
    EXPECT_EQ(ok.exit_code, kExitSuccess);
    for (const auto& v : ok.report["results"]["nu"]) EXPECT_NEAR(v.get<double>(), 1.0, 1e-14);
    EXPECT_TRUE(ok.report["results"]["spectrum"]["diagonalizable"].get<bool>());

    const CommandResult bad = cmd_williamson({(kModels / "p_squared.json").string()});
    EXPECT_EQ(bad.exit_code, kExitNegative);
    EXPECT_EQ(bad.report["error"]["kind"], "definiteness");
    EXPECT_EQ(bad.report["error"]["smallest_eigenvalue"], 0.0);
    EXPECT_FALSE(bad.report["results"]["spectrum"]["positive_definite"].get<bool>());
}

TEST(Commands, RecurIdentityAndHorizon) {
    RecurArgs args{(kModels / "identity_n2.json").string()};
    args.T = 1.0;
    const CommandResult r = cmd_recur(args);
    EXPECT_EQ(r.exit_code, kExitSuccess);
    EXPECT_TRUE(r.report["results"]["found"].get<bool>());
    EXPECT_NEAR(r.report["results"]["tau"].get<double>(), 2.0 * std::numbers::pi, 1e-6);
    EXPECT_LT(r.report["results"]["achieved_distance"].get<double>(), 1e-10);

    args.t_max = 5.0;
    const CommandResult none = cmd_recur(args);
    EXPECT_EQ(none.exit_code, kExitSuccess);
    EXPECT_FALSE(none.report["results"]["found"].get<bool>());

    const CommandResult p2 = cmd_recur({(kModels / "p_squared.json").string()});
    EXPECT_EQ(p2.exit_code, kExitNegative);
}

TEST(Commands, EvolveEmptyAndSwap) {
    const auto empty = write_temp("empty_schedule.json", R"({"segments": []})");
    const CommandResult r = cmd_evolve({(kModels / "chain_n2.json").string(), empty.string()});
    EXPECT_EQ(r.exit_code, kExitSuccess);
    const RealMatrix id = RealMatrix::Identity(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_EQ(r.report["results"]["S"][i][j].get<double>(), id(i, j));
        }
    }

    EvolveArgs swap{(kModels / "beam_splitter.json").string(),
                    (kModels / "swap_schedule.json").string()};
    swap.check_physical = true;
    const CommandResult s = cmd_evolve(swap);
    EXPECT_EQ(s.exit_code, kExitSuccess);
    EXPECT_NEAR(s.report["results"]["covariance"]["sigma"][2][2].get<double>(), 5.5, 1e-12);
    EXPECT_NEAR(s.report["results"]["covariance"]["sigma"][0][0].get<double>(), 0.5, 1e-12);
}

TEST(Commands, EvolveScheduleMismatch) {
    const auto sched = write_temp("mismatch.json", R"({"segments": [{"duration": 1, "controls": [1]}]})");
    const CommandResult r = cmd_evolve({(kModels / "chain_n2.json").string(), sched.string()});
    EXPECT_EQ(r.exit_code, kExitUsage);
    EXPECT_TRUE(r.report.contains("error"));
}

TEST(Commands, ChainVerdicts) {
    ChainArgs canonical;
    canonical.spec.n = 3;
    const CommandResult r = cmd_chain(canonical);
    EXPECT_EQ(r.exit_code, kExitSuccess);
    EXPECT_EQ(r.report["results"]["verdict"], "CONTROLLABLE");
    EXPECT_TRUE(r.report["results"]["identities"]["all_pass"].get<bool>());

    ChainArgs passive;
    passive.spec.g2 = 0.0;
    passive.rotation_only = true;
    const CommandResult p = cmd_chain(passive);
    EXPECT_EQ(p.exit_code, kExitNegative);
    EXPECT_EQ(p.report["results"]["verdict"], "NOT_ESTABLISHED");
    EXPECT_EQ(p.report["results"]["passive"], true);

    ChainArgs tiny;
    tiny.spec.n = 1;
    tiny.identities_requested = true;
    const CommandResult t = cmd_chain(tiny);
    EXPECT_EQ(t.exit_code, kExitUsage);
    EXPECT_NE(t.report["error"]["message"].get<std::string>().find("n >= 3"), std::string::npos);

    ChainArgs invalid;
    invalid.spec.omega = -1.0;
    EXPECT_EQ(cmd_chain(invalid).exit_code, kExitUsage);
}

TEST(Commands, ReportsAreDeterministic) {
    RecurArgs args{(kModels / "incommensurate.json").string()};
    args.epsilon = 0.5;
    args.T = 10.0;
    EXPECT_EQ(stable(cmd_recur(args)), stable(cmd_recur(args)));
    EXPECT_EQ(stable(cmd_rank({(kModels / "chain_n3.json").string()})),
              stable(cmd_rank({(kModels / "chain_n3.json").string()})));
    ChainArgs c;
    c.spec.n = 4;
    EXPECT_EQ(stable(cmd_chain(c)), stable(cmd_chain(c)));
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QUADCTL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodeContract) {
    const std::string m = (kModels / "chain_n2.json").string();
    EXPECT_EQ(run_cli("rank --model " + m), 0);
    EXPECT_EQ(run_cli("rank --model " + (kModels / "single_control.json").string()), 1);
    EXPECT_EQ(run_cli("rank --model " + (kData / "bad_kind.json").string()), 2);
    EXPECT_EQ(run_cli("rank"), 2);
    EXPECT_EQ(run_cli("frobnicate"), 2);
    EXPECT_EQ(run_cli("rank --model " + m + " --tol -1"), 2);
    EXPECT_EQ(run_cli("williamson --model " + (kModels / "p_squared.json").string()), 1);
    EXPECT_EQ(run_cli("chain --n 3"), 0);
    EXPECT_EQ(run_cli("chain --n 1 --identities"), 2);
    EXPECT_EQ(run_cli("--version"), 0);
}

TEST(Cli, WritesReportToFile) {
    const fs::path out = fs::temp_directory_path() / "quadctl_test_out.json";
    fs::remove(out);
    EXPECT_EQ(run_cli("chain --n 2 --out " + out.string()), 0);
    const nlohmann::json report = nlohmann::json::parse(read_text_file(out));
    EXPECT_EQ(report["results"]["dimension_found"], 10);
    EXPECT_TRUE(report.contains("wall_time_seconds"));
}

}  // namespace
