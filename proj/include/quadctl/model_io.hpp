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
#ifndef QUADCTL_MODEL_IO_HPP
#define QUADCTL_MODEL_IO_HPP

#include "quadctl/chain.hpp"
#include "quadctl/errors.hpp"
#include "quadctl/evolution.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadctl {

/// Malformed model or schedule document. `where()` is a JSON pointer to the
/// offending field, or "line L, column C" for syntax errors.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& message)
        : Error(where + ": " + message), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

struct NamedHamiltonian {
    std::string name;
    std::vector<HamiltonianTerm> terms;
    std::optional<RealMatrix> matrix;  // explicit 2n x 2n A instead of terms

    QuadraticHamiltonian build(ModeCount n) const;
};

/// A control problem: named Hamiltonians plus the drift/control selection. The
/// optional chain shorthand contributes H0, H1 and H2.
struct ModelDocument {
    int modes = 0;
    std::vector<NamedHamiltonian> hamiltonians;
    std::string drift;
    std::vector<std::string> controls;
    std::optional<ChainSpec> chain;

    /// Explicit Hamiltonians followed by those generated from the chain shorthand.
    std::vector<NamedHamiltonian> resolved_hamiltonians() const;
    QuadraticHamiltonian hamiltonian(std::string_view name) const;
    ControlModel control_model() const;
};

ModelDocument parse_model(std::string_view text);
ModelDocument load_model(const std::filesystem::path& path);
nlohmann::json model_to_json(const ModelDocument& doc);

struct ScheduleDocument {
    ControlSchedule schedule;
    std::optional<RealMatrix> initial_covariance;
};

ScheduleDocument parse_schedule(std::string_view text);
nlohmann::json schedule_to_json(const ScheduleDocument& doc);

std::string read_text_file(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const RealMatrix& m);

/// Serializes with floats at 17 significant digits so that output is reproducible
/// and re-parses to identical doubles.
std::string format_json(const nlohmann::json& value, int indent = 2);

}  // namespace quadctl

#endif  // QUADCTL_MODEL_IO_HPP
