// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_CONFIG_HPP
#define FRACVAR_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fracvar/model.hpp"

namespace fracvar {

/// Flat JSON problem description:
///   {"alpha": 0.5, "a": 0, "b": 1, "xa": 0, "xb": 1,
///    "lagrangian": "(dax - 2/gamma(2.5)*t^1.5)^2", "exact": "t^2"}
/// `exact` is optional and may only use the variable t.
struct ProblemConfig {
    double alpha = 0.5;
    double a = 0.0;
    double b = 1.0;
    double xa = 0.0;
    double xb = 1.0;
    std::string lagrangian;
    std::optional<std::string> exact;
};

/// Malformed or inconsistent configuration. `where()` names the field or
/// gives the byte position of a syntax error.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, std::string where)
        : std::runtime_error(what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

ProblemConfig parse_problem_config(std::string_view json_text);
ProblemConfig load_problem_config(const std::filesystem::path& path);

/// Builds the problem and checks its invariants, including that `exact`
/// matches the boundary values to 1e−9.
VariationalProblem to_problem(const ProblemConfig& config);

} // namespace fracvar

#endif // FRACVAR_CONFIG_HPP
