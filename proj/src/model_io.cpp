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
#include "quadctl/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace quadctl {
namespace {

using nlohmann::json;

std::string child(const std::string& path, std::string_view key) {
    return path + "/" + std::string(key);
}
std::string child(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (auto k : keys) {
            known = known || item.key() == k;
        }
        if (!known) {
            throw ParseError(child(path, item.key()), "unknown field");
        }
    }
}

const json& require_object(const json& v, const std::string& path) {
    if (!v.is_object()) {
        throw ParseError(path.empty() ? "/" : path, "expected an object");
    }
    return v;
}

const json& field(const json& obj, std::string_view key, const std::string& path) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) {
        throw ParseError(child(path, key), "missing required field");
    }
    return *it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) {
        throw ParseError(path, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ParseError(path, "number is not finite");
    }
    return d;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) {
        throw ParseError(path, "expected an integer");
    }
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) {
        throw ParseError(path, "expected a string");
    }
    return v.get<std::string>();
}

RealMatrix as_matrix(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) {
        throw ParseError(path, "expected a non-empty array of rows");
    }
    const auto rows = v.size();
    RealMatrix m;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rpath = child(path, r);
        const json& row = v[r];
        if (!row.is_array()) {
            throw ParseError(rpath, "expected an array of numbers");
        }
        if (r == 0) {
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(row.size()));
        } else if (row.size() != static_cast<std::size_t>(m.cols())) {
            throw ParseError(rpath, "row length differs from row 0");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                as_number(row[c], child(rpath, c));
        }
    }
    return m;
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Convert the byte offset into a line/column position.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i + 1 < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        const auto pos = msg.find("parse error");
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                         pos == std::string::npos ? msg : msg.substr(pos));
    }
}

HamiltonianTerm parse_term(const json& v, const std::string& path) {
    require_object(v, path);
    const std::string kind = as_string(field(v, "kind", path), child(path, "kind"));
    if (kind == "number" || kind == "squeeze") {
        only_keys(v, path, {"kind", "mode", "coeff"});
        const int mode = as_int(field(v, "mode", path), child(path, "mode"));
        const double coeff = as_number(field(v, "coeff", path), child(path, "coeff"));
        return kind == "number" ? HamiltonianTerm::number(mode, coeff)
                                : HamiltonianTerm::squeeze(mode, coeff);
    }
    if (kind == "hop" || kind == "pair") {
        only_keys(v, path, {"kind", "modes", "coeff"});
        const json& modes = field(v, "modes", path);
        if (!modes.is_array() || modes.size() != 2) {
            throw ParseError(child(path, "modes"), "expected two mode indices");
        }
        const int j = as_int(modes[0], child(child(path, "modes"), 0));
        const int k = as_int(modes[1], child(child(path, "modes"), 1));
        const double coeff = as_number(field(v, "coeff", path), child(path, "coeff"));
        return kind == "hop" ? HamiltonianTerm::hop(j, k, coeff)
                             : HamiltonianTerm::pair(j, k, coeff);
    }
    if (kind == "generic") {
        only_keys(v, path, {"kind", "matrix"});
        return HamiltonianTerm::generic(as_matrix(field(v, "matrix", path), child(path, "matrix")));
    }
    throw ParseError(child(path, "kind"), "unknown term kind '" + kind + "'");
}

ChainSpec parse_chain(const json& v, const std::string& path) {
    require_object(v, path);
    only_keys(v, path, {"n", "omega", "g1", "g2", "omega1", "chi"});
    ChainSpec spec;
    spec.n = as_int(field(v, "n", path), child(path, "n"));
    auto opt = [&](std::string_view key, double& out) {
        if (v.contains(std::string(key))) {
            out = as_number(v.at(std::string(key)), child(path, key));
        }
    };
    opt("omega", spec.omega);
    opt("g1", spec.g1);
    opt("g2", spec.g2);
    opt("omega1", spec.omega1);
    opt("chi", spec.chi);
    try {
        spec.validate();
    } catch (const Error& e) {
        throw ParseError(path, e.what());
    }
    return spec;
}

json term_to_json(const HamiltonianTerm& t) {
    switch (t.kind) {
        case TermKind::number:
        case TermKind::squeeze:
            return {{"kind", to_string(t.kind)}, {"mode", t.j}, {"coeff", t.coeff}};
        case TermKind::hop:
        case TermKind::pair:
            return {{"kind", to_string(t.kind)}, {"modes", {t.j, t.k}}, {"coeff", t.coeff}};
        case TermKind::generic:
            return {{"kind", "generic"}, {"matrix", matrix_to_json(t.fragment)}};
    }
    return {};
}

void write_json(std::ostream& os, const json& v, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    const char* nl = indent > 0 ? "\n" : "";
    const char* sep = indent > 0 ? ": " : ":";
    if (v.is_object()) {
        if (v.empty()) {
            os << "{}";
            return;
        }
        os << '{' << nl;
        bool first = true;
        for (const auto& item : v.items()) {
            if (!first) os << ',' << nl;
            first = false;
            os << pad << json(item.key()).dump() << sep;
            write_json(os, item.value(), indent, depth + 1);
        }
        os << nl << close_pad << '}';
    } else if (v.is_array()) {
        if (v.empty()) {
            os << "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) {
            return e.is_structured();
        });
        if (flat) {
            os << '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ", ";
                write_json(os, v[i], indent, depth + 1);
            }
            os << ']';
            return;
        }
        os << '[' << nl;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',' << nl;
            os << pad;
            write_json(os, v[i], indent, depth + 1);
        }
        os << nl << close_pad << ']';
    } else if (v.is_number_float()) {
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            os << "null";
            return;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        os << buf;
    } else {
        os << v.dump();
    }
}

}  // namespace

QuadraticHamiltonian NamedHamiltonian::build(ModeCount n) const {
    if (matrix) {
        if (matrix->rows() != n.dimension() || matrix->cols() != n.dimension()) {
            throw ShapeError("Hamiltonian '" + name + "': matrix must be " +
                             std::to_string(n.dimension()) + "x" + std::to_string(n.dimension()));
        }
        return QuadraticHamiltonian(*matrix, name);
    }
    return from_terms(n, terms, name);
}

std::vector<NamedHamiltonian> ModelDocument::resolved_hamiltonians() const {
    std::vector<NamedHamiltonian> out = hamiltonians;
    if (chain) {
        const ChainSpec& c = *chain;
        out.push_back({"H0", chain_drift_terms(c), std::nullopt});
        out.push_back({"H1", {HamiltonianTerm::number(1, c.omega1)}, std::nullopt});
        out.push_back({"H2", {HamiltonianTerm::squeeze(1, c.chi)}, std::nullopt});
    }
    return out;
}

QuadraticHamiltonian ModelDocument::hamiltonian(std::string_view name) const {
    for (const auto& h : resolved_hamiltonians()) {
        if (h.name == name) {
            return h.build(ModeCount(modes));
        }
    }
    throw InvalidArgumentError("no Hamiltonian named '" + std::string(name) + "'");
}

ControlModel ModelDocument::control_model() const {
    std::vector<QuadraticHamiltonian> ctrl;
    for (const auto& name : controls) {
        ctrl.push_back(hamiltonian(name));
    }
    return ControlModel(hamiltonian(drift), std::move(ctrl));
}

ModelDocument parse_model(std::string_view text) {
    const json root = parse_text(text);
    const std::string path;
    require_object(root, path);
    only_keys(root, path, {"modes", "hamiltonians", "drift", "controls", "chain"});

    ModelDocument doc;
    if (root.contains("chain")) {
        doc.chain = parse_chain(root.at("chain"), "/chain");
        doc.modes = doc.chain->n;
    }
    if (root.contains("modes")) {
        doc.modes = as_int(root.at("modes"), "/modes");
        if (doc.modes < 1) {
            throw ParseError("/modes", "must be >= 1");
        }
        if (doc.chain && doc.chain->n != doc.modes) {
            throw ParseError("/modes", "disagrees with /chain/n");
        }
    } else if (!doc.chain) {
        throw ParseError("/modes", "missing required field");
    }
    const ModeCount n(doc.modes);

    if (root.contains("hamiltonians")) {
        const json& hs = root.at("hamiltonians");
        if (!hs.is_array()) {
            throw ParseError("/hamiltonians", "expected an array");
        }
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::string hpath = child("/hamiltonians", i);
            const json& h = require_object(hs[i], hpath);
            only_keys(h, hpath, {"name", "terms", "matrix"});
            NamedHamiltonian nh;
            nh.name = as_string(field(h, "name", hpath), child(hpath, "name"));
            if (h.contains("terms") == h.contains("matrix")) {
                throw ParseError(hpath, "exactly one of 'terms' or 'matrix' is required");
            }
            if (h.contains("terms")) {
                const json& ts = h.at("terms");
                if (!ts.is_array()) {
                    throw ParseError(child(hpath, "terms"), "expected an array");
                }
                for (std::size_t k = 0; k < ts.size(); ++k) {
                    nh.terms.push_back(parse_term(ts[k], child(child(hpath, "terms"), k)));
                }
            } else {
                nh.matrix = as_matrix(h.at("matrix"), child(hpath, "matrix"));
            }
            try {
                nh.build(n);
            } catch (const Error& e) {
                throw ParseError(hpath, e.what());
            }
            doc.hamiltonians.push_back(std::move(nh));
        }
    }

    std::set<std::string> names;
    for (const auto& h : doc.resolved_hamiltonians()) {
        if (!names.insert(h.name).second) {
            throw ParseError("/hamiltonians", "duplicate Hamiltonian name '" + h.name + "'");
        }
    }
    if (names.empty()) {
        throw ParseError("/hamiltonians", "no Hamiltonians defined");
    }

    if (root.contains("drift")) {
        doc.drift = as_string(root.at("drift"), "/drift");
    } else if (doc.chain) {
        doc.drift = "H0";
    } else {
        throw ParseError("/drift", "missing required field");
    }
    if (!names.contains(doc.drift)) {
        throw ParseError("/drift", "unknown Hamiltonian '" + doc.drift + "'");
    }

    if (root.contains("controls")) {
        const json& cs = root.at("controls");
        if (!cs.is_array()) {
            throw ParseError("/controls", "expected an array of names");
        }
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const std::string name = as_string(cs[i], child("/controls", i));
            if (!names.contains(name)) {
                throw ParseError(child("/controls", i), "unknown Hamiltonian '" + name + "'");
            }
            doc.controls.push_back(name);
        }
    } else if (doc.chain) {
        doc.controls = {"H1", "H2"};
    }
    return doc;
}

ModelDocument load_model(const std::filesystem::path& path) {
    return parse_model(read_text_file(path));
}

json model_to_json(const ModelDocument& doc) {
    json root = json::object();
    root["modes"] = doc.modes;
    if (doc.chain) {
        const ChainSpec& c = *doc.chain;
        root["chain"] = {{"n", c.n},   {"omega", c.omega},   {"g1", c.g1},
                         {"g2", c.g2}, {"omega1", c.omega1}, {"chi", c.chi}};
    }
    json hs = json::array();
    for (const auto& h : doc.hamiltonians) {
        json entry = {{"name", h.name}};
        if (h.matrix) {
            entry["matrix"] = matrix_to_json(*h.matrix);
        } else {
            json terms = json::array();
            for (const auto& t : h.terms) {
                terms.push_back(term_to_json(t));
            }
            entry["terms"] = std::move(terms);
        }
        hs.push_back(std::move(entry));
    }
    root["hamiltonians"] = std::move(hs);
    root["drift"] = doc.drift;
    root["controls"] = doc.controls;
    return root;
}

ScheduleDocument parse_schedule(std::string_view text) {
    const json root = parse_text(text);
    require_object(root, "");
    only_keys(root, "", {"segments", "initial_covariance"});
    const json& segs = field(root, "segments", "");
    if (!segs.is_array()) {
        throw ParseError("/segments", "expected an array");
    }
    std::vector<ControlSegment> segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string spath = child("/segments", i);
        const json& s = require_object(segs[i], spath);
        only_keys(s, spath, {"duration", "controls"});
        ControlSegment seg;
        seg.duration = as_number(field(s, "duration", spath), child(spath, "duration"));
        if (!(seg.duration > 0.0)) {
            throw ParseError(child(spath, "duration"), "must be positive");
        }
        if (s.contains("controls")) {
            const json& f = s.at("controls");
            if (!f.is_array()) {
                throw ParseError(child(spath, "controls"), "expected an array of numbers");
            }
            for (std::size_t k = 0; k < f.size(); ++k) {
                seg.f.push_back(as_number(f[k], child(child(spath, "controls"), k)));
            }
        }
        segments.push_back(std::move(seg));
    }
    ScheduleDocument doc{ControlSchedule(std::move(segments)), std::nullopt};
    if (root.contains("initial_covariance")) {
        doc.initial_covariance = as_matrix(root.at("initial_covariance"), "/initial_covariance");
    }
    return doc;
}

json schedule_to_json(const ScheduleDocument& doc) {
    json segs = json::array();
    for (const auto& s : doc.schedule.segments()) {
        segs.push_back({{"duration", s.duration}, {"controls", s.f}});
    }
    json root = {{"segments", std::move(segs)}};
    if (doc.initial_covariance) {
        root["initial_covariance"] = matrix_to_json(*doc.initial_covariance);
    }
    return root;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string(), "cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json matrix_to_json(const RealMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_json(const json& value, int indent) {
    std::ostringstream os;
    write_json(os, value, indent, 0);
    return os.str();
}

}  // namespace quadctl
