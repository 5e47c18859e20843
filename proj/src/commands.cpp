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
#include "quadctl/recurrence.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace quadctl::cli {
namespace {

using nlohmann::json;

json complex_list(const std::vector<std::complex<double>>& values) {
    json out = json::array();
    for (const auto& z : values) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

template <class Body>
CommandResult run_command(const char* name, json arguments, Body&& body) {
    CommandResult out;
    out.report = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"command", name},
                  {"arguments", std::move(arguments)}};
    try {
        body(out);
    } catch (const DefinitenessError& e) {
        out.exit_code = kExitNegative;
        out.report["error"] = {{"kind", "definiteness"},
                               {"message", e.what()},
                               {"smallest_eigenvalue", e.eigenvalue()}};
    } catch (const NumericalError& e) {
        out.exit_code = kExitNegative;
        out.report["error"] = {
            {"kind", "numerical"}, {"message", e.what()}, {"achieved", e.achieved()}};
    } catch (const ParseError& e) {
        out.exit_code = kExitUsage;
        out.report["error"] = {{"kind", "parse"}, {"where", e.where()}, {"message", e.what()}};
    } catch (const Error& e) {
        out.exit_code = kExitUsage;
        out.report["error"] = {{"kind", "input"}, {"message", e.what()}};
    }
    return out;
}

struct LoadedModel {
    ModelDocument doc;
    std::string digest;
};

LoadedModel load(const std::string& path) {
    const std::string text = read_text_file(path);
    return {parse_model(text), sha256_hex(text)};
}

std::string target_name(const ModelDocument& doc, const std::string& requested) {
    return requested.empty() ? doc.drift : requested;
}

json spectrum_json(const SpectrumCertificate& cert) {
    return {{"eigenvalues_of_A_Omega", complex_list(cert.eigenvalues)},
            {"max_real_part", cert.max_real_part},
            {"diagonalizable", cert.diagonalizable},
            {"diagonalizer_condition", cert.diagonalizer_condition},
            {"diagonalizer_condition_cap", kDiagonalizerConditionCap},
            {"smallest_eigenvalue_of_A", cert.smallest_eigenvalue_of_a},
            {"positive_definite", cert.positive_definite}};
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

CommandResult cmd_rank(const RankArgs& args) {
    json arguments = {{"model", args.model_path}, {"max_rounds", args.max_rounds}};
    return run_command("rank", std::move(arguments), [&](CommandResult& out) {
        const LoadedModel m = load(args.model_path);
        out.report["input_digest"] = "sha256:" + m.digest;
        out.report["tolerances"] = {{"closure_relative", args.tol}, {"passivity", args.tol}};

        std::vector<SymplecticGenerator> seeds = {generator(m.doc.hamiltonian(m.doc.drift))};
        std::vector<std::string> names = {m.doc.drift};
        for (const auto& c : m.doc.controls) {
            seeds.push_back(generator(m.doc.hamiltonian(c)));
            names.push_back(c);
        }
        const LieSubspace sub = closure(seeds, args.tol, args.max_rounds);
        const RankReport rank = rank_criterion(sub);
        json results = {{"tol", args.tol},
                        {"generators", names},
                        {"dimension_found", rank.dimension_found},
                        {"dimension_full", rank.dimension_full},
                        {"rank_criterion_met", rank.rank_criterion_met},
                        {"closed", sub.closed()},
                        {"bracket_depth_reached", sub.bracket_depth_reached()},
                        {"weakest_acceptance", sub.weakest_acceptance()},
                        {"residual_spectrum", rank.residual_spectrum}};
        if (!rank.rank_criterion_met) {
            results["passive"] = passivity_check(sub, args.tol);
            results["passive_dimension_bound"] = passive_algebra_dimension(sub.modes());
        }
        out.report["results"] = std::move(results);
        out.exit_code = rank.rank_criterion_met ? kExitSuccess : kExitNegative;
    });
}

CommandResult cmd_williamson(const WilliamsonArgs& args) {
    json arguments = {{"model", args.model_path}, {"hamiltonian", args.hamiltonian}};
    return run_command("williamson", std::move(arguments), [&](CommandResult& out) {
        const LoadedModel m = load(args.model_path);
        out.report["input_digest"] = "sha256:" + m.digest;
        out.report["tolerances"] = {{"definiteness_relative", args.tol},
                                    {"reconstruction_relative", 1e-8}};
        const std::string name = target_name(m.doc, args.hamiltonian);
        const QuadraticHamiltonian h = m.doc.hamiltonian(name);

        json results = {{"tol", args.tol}, {"hamiltonian", name}};
        results["spectrum"] = spectrum_json(spectrum_certificate(h, args.tol));
        out.report["results"] = results;

        const WilliamsonDecomposition w = williamson_decompose(h, args.tol);
        results["nu"] = w.nu;
        results["V"] = matrix_to_json(w.V);
        results["residual"] = w.residual;
        results["V_symplectic_residual"] = symplectic_residual(w.V);
        results["conditioning_bound"] = conditioning_bound(h, args.tol);
        out.report["results"] = std::move(results);
    });
}

CommandResult cmd_recur(const RecurArgs& args) {
    json arguments = {{"model", args.model_path},
                      {"hamiltonian", args.hamiltonian},
                      {"epsilon", args.epsilon},
                      {"T", args.T},
                      {"grid_points_per_period", args.grid_points_per_period}};
    arguments["t_max"] = args.t_max ? json(*args.t_max) : json(nullptr);
    return run_command("recur", std::move(arguments), [&](CommandResult& out) {
        const LoadedModel m = load(args.model_path);
        out.report["input_digest"] = "sha256:" + m.digest;
        out.report["tolerances"] = {{"definiteness_relative", args.tol},
                                    {"epsilon", args.epsilon}};
        const std::string name = target_name(m.doc, args.hamiltonian);
        RecurrenceQuery q{m.doc.hamiltonian(name), args.epsilon, args.T, args.t_max,
                          args.grid_points_per_period};
        require_positive_definite(q.hamiltonian, args.tol);
        const RecurrenceResult r = find_recurrence(q);
        json results = {{"tol", args.epsilon},
                        {"hamiltonian", name},
                        {"found", r.found},
                        {"nu", r.nu},
                        {"K", r.K},
                        {"t_max", r.t_max},
                        {"grid_step", r.grid_step},
                        {"grid_points_scanned", r.grid_points_scanned},
                        {"candidates_refined", r.candidates_refined},
                        {"best_distance_seen", r.best_distance_seen},
                        {"best_time_seen", r.best_time_seen}};
        if (r.found) {
            results["tau"] = r.tau;
            results["achieved_distance"] = r.achieved_distance;
            results["mode_distance_at_tau"] = r.mode_distance_at_tau;
            results["bound_holds"] = r.achieved_distance <= r.K * r.mode_distance_at_tau + 1e-9;
        }
        out.report["results"] = std::move(results);
    });
}

CommandResult cmd_evolve(const EvolveArgs& args) {
    json arguments = {{"model", args.model_path},
                      {"schedule", args.schedule_path},
                      {"check_physical", args.check_physical}};
    return run_command("evolve", std::move(arguments), [&](CommandResult& out) {
        const std::string model_text = read_text_file(args.model_path);
        const std::string schedule_text = read_text_file(args.schedule_path);
        const ModelDocument doc = parse_model(model_text);
        const ScheduleDocument sched = parse_schedule(schedule_text);
        out.report["input_digest"] = "sha256:" + sha256_hex(model_text + '\0' + schedule_text);
        out.report["tolerances"] = {{"symplectic_audit_relative", args.tol}};

        const ControlModel model = doc.control_model();
        const RealMatrix s = propagate(model, sched.schedule);
        const double audit = audit_symplecticity(s);
        const double threshold = args.tol * std::max(1.0, s.squaredNorm());
        json results = {{"tol", args.tol},
                        {"segments", sched.schedule.segments().size()},
                        {"S", matrix_to_json(s)},
                        {"symplectic_audit", audit},
                        {"audit_threshold", threshold},
                        {"audit_passed", audit <= threshold}};
        if (sched.initial_covariance) {
            const CovarianceState state(*sched.initial_covariance, args.check_physical);
            if (state.modes() != model.modes()) {
                throw ShapeError("initial covariance does not match the model mode count");
            }
            const CovarianceState evolved = evolve_covariance(state, s, std::max(threshold, 1e-8));
            json cov = {{"sigma", matrix_to_json(evolved.sigma())},
                        {"trace_before", state.sigma().trace()},
                        {"trace_after", evolved.sigma().trace()}};
            const QuadraticHamiltonian before(state.sigma());
            if (is_positive_definite(before)) {
                cov["symplectic_eigenvalues_before"] = symplectic_eigenvalues(before);
                cov["symplectic_eigenvalues_after"] =
                    symplectic_eigenvalues(QuadraticHamiltonian(evolved.sigma()));
            }
            results["covariance"] = std::move(cov);
        }
        out.exit_code = audit <= threshold ? kExitSuccess : kExitNegative;
        out.report["results"] = std::move(results);
    });
}

CommandResult cmd_chain(const ChainArgs& args) {
    const ChainSpec& s = args.spec;
    json arguments = {{"n", s.n},
                      {"omega", s.omega},
                      {"g1", s.g1},
                      {"g2", s.g2},
                      {"omega1", s.omega1},
                      {"chi", s.chi},
                      {"alpha", args.triple.alpha},
                      {"beta", args.triple.beta},
                      {"delta", args.triple.delta},
                      {"rotation_only", args.rotation_only},
                      {"identities", args.identities_requested}};
    const std::string digest = sha256_hex(format_json(arguments, 0));
    return run_command("chain", std::move(arguments), [&](CommandResult& out) {
        out.report["input_digest"] = "sha256:" + digest;
        out.report["tolerances"] = {{"closure_relative", args.tol},
                                    {"identity_absolute", args.identity_tol}};
        s.validate();

        const bool run_identities =
            args.identities_requested || (s.n >= 3 && s.g1 == s.g2 && !args.rotation_only);
        std::optional<IdentityReport> identities;
        if (run_identities) {
            identities = verify_supplemental_identities(s, args.identity_tol);
        }

        const ControllabilityReport r = controllability_report(
            s, args.triple, args.tol,
            args.rotation_only ? ChainControls::rotation_only
                               : ChainControls::rotation_and_squeezing);
        json results = {
            {"tol", args.tol},
            {"verdict", to_string(r.verdict)},
            {"controls", args.rotation_only ? json{"H1"} : json{"H1", "H2"}},
            {"dimension_found", r.rank.dimension_found},
            {"dimension_full", r.rank.dimension_full},
            {"rank_criterion_met", r.rank.rank_criterion_met},
            {"closed", r.closed},
            {"bracket_depth_reached", r.bracket_depth},
            {"residual_spectrum", r.rank.residual_spectrum},
            {"g1_renormalized", s.g1_renormalized()},
            {"g2_renormalized", s.g2_renormalized()},
            {"positivity",
             {{"sufficient", r.positivity.sufficient},
              {"actual", r.positivity.actual},
              {"min_eigenvalue", r.positivity.min_eigenvalue}}},
            {"triple",
             {{"valid", r.triple_valid},
              {"failure", r.triple_failure},
              {"min_eigenvalues", r.triple_min_eigenvalues},
              {"closure_dimension", r.triple_closure_dimension}}}};
        if (r.passive) {
            results["passive"] = *r.passive;
            results["passive_dimension_bound"] = passive_algebra_dimension(ModeCount(s.n));
        }
        bool identities_ok = true;
        if (identities) {
            json recs = json::array();
            for (const auto& rec : identities->records) {
                recs.push_back({{"name", rec.name},
                                {"statement", rec.statement},
                                {"scale", rec.scale},
                                {"residual", rec.residual}});
            }
            results["identities"] = {{"tol", identities->tol},
                                     {"all_pass", identities->all_pass},
                                     {"max_residual", identities->max_residual},
                                     {"records", std::move(recs)}};
            identities_ok = identities->all_pass;
        }
        out.report["results"] = std::move(results);
        out.exit_code =
            r.verdict == Verdict::controllable && identities_ok ? kExitSuccess : kExitNegative;
    });
}

}  // namespace quadctl::cli
