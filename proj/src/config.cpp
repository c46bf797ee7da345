// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fracvar/expr.hpp"

namespace fracvar {
namespace {

using nlohmann::json;

double number_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("missing field '") + key + "'", key);
    const json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number", key);
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(std::string("field '") + key + "' must be finite", key);
    return d;
}

std::string expr_where(const char* field, const expr::ParseError& e) {
    return std::string(field) + " offset " + std::to_string(e.offset());
}

} // namespace

ProblemConfig parse_problem_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what(),
                          "byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) throw ConfigError("problem config must be a JSON object", "byte 0");
    static const std::set<std::string> known = {"alpha", "a", "b", "xa", "xb", "lagrangian", "exact"};
    for (const auto& item : doc.items()) {
        if (!known.count(item.key())) {
            throw ConfigError("unknown field '" + item.key() + "'", item.key());
        }
    }
    ProblemConfig cfg;
    cfg.alpha = number_field(doc, "alpha");
    cfg.a = number_field(doc, "a");
    cfg.b = number_field(doc, "b");
    cfg.xa = number_field(doc, "xa");
    cfg.xb = number_field(doc, "xb");
    if (!doc.contains("lagrangian") || !doc.at("lagrangian").is_string()) {
        throw ConfigError("field 'lagrangian' must be a string", "lagrangian");
    }
    cfg.lagrangian = doc.at("lagrangian").get<std::string>();
    if (doc.contains("exact") && !doc.at("exact").is_null()) {
        if (!doc.at("exact").is_string()) throw ConfigError("field 'exact' must be a string", "exact");
        cfg.exact = doc.at("exact").get<std::string>();
    }
    return cfg;
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open problem config '" + path.string() + "'", path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_problem_config(text.str());
}

VariationalProblem to_problem(const ProblemConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ConfigError("alpha must lie in (0,1)", "alpha");
    if (!(cfg.b > cfg.a)) throw ConfigError("need a < b", "b");

    VariationalProblem p;
    p.name = "config";
    p.a = cfg.a;
    p.b = cfg.b;
    p.alpha = cfg.alpha;
    p.xa = cfg.xa;
    p.xb = cfg.xb;
    try {
        p.lagrangian = expr::to_lagrangian(cfg.lagrangian);
    } catch (const expr::ParseError& e) {
        throw ConfigError("lagrangian: " + std::string(e.what()), expr_where("lagrangian", e));
    }
    if (cfg.exact) {
        try {
            p.exact = expr::to_function_of_t(*cfg.exact);
        } catch (const expr::ParseError& e) {
            throw ConfigError("exact: " + std::string(e.what()), expr_where("exact", e));
        }
        try {
            if (!(std::abs(p.exact(p.a) - p.xa) <= 1e-9)) {
                throw ConfigError("exact solution does not satisfy x(a) = xa", "exact");
            }
            if (!(std::abs(p.exact(p.b) - p.xb) <= 1e-9)) {
                throw ConfigError("exact solution does not satisfy x(b) = xb", "exact");
            }
        } catch (const expr::EvalError& e) {
            throw ConfigError(std::string("exact: ") + e.what(), "exact");
        }
    }
    return p;
}

} // namespace fracvar
