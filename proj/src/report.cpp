// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace fracvar {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_solution_csv(std::ostream& out, const VariationalProblem& problem,
                        const SolveReport& report) {
    const Trajectory& tr = report.trajectory;
    const bool exact = problem.has_exact();
    out << (exact ? "i,t,x,exact,abs_err\n" : "i,t,x\n");
    for (int i = 0; i <= tr.mesh.n(); ++i) {
        const double t = tr.mesh.t(i);
        out << i << ',' << format_real(t) << ',' << format_real(tr.values[i]);
        if (exact) {
            const double e = problem.exact(t);
            out << ',' << format_real(e) << ',' << format_real(std::abs(e - tr.values[i]));
        }
        out << '\n';
    }
}

void write_solution_json(std::ostream& out, const VariationalProblem& problem,
                         const SolveReport& report) {
    using nlohmann::ordered_json;
    const Trajectory& tr = report.trajectory;
    ordered_json doc;
    doc["problem"] = problem.name;
    doc["n"] = tr.mesh.n();
    doc["path"] = std::string(to_string(report.path));
    doc["iterations"] = report.iterations;
    doc["residual"] = report.residual_inf_norm;
    doc["E"] = report.error_vs_exact ? ordered_json(*report.error_vs_exact) : ordered_json(nullptr);
    doc["wall_seconds"] = report.wall_seconds;
    ordered_json nodes = ordered_json::array();
    for (int i = 0; i <= tr.mesh.n(); ++i) {
        const double t = tr.mesh.t(i);
        ordered_json node;
        node["i"] = i;
        node["t"] = t;
        node["x"] = tr.values[i];
        if (problem.has_exact()) {
            node["exact"] = problem.exact(t);
            node["abs_err"] = std::abs(problem.exact(t) - tr.values[i]);
        }
        nodes.push_back(std::move(node));
    }
    doc["nodes"] = std::move(nodes);
    out << doc.dump(2) << '\n';
}

std::string summary_line(const SolveReport& report) {
    char buf[160];
    char err[40] = "n/a";
    if (report.error_vs_exact) std::snprintf(err, sizeof err, "%.6g", *report.error_vs_exact);
    std::snprintf(buf, sizeof buf, "path=%s residual=%.3g E=%s T=%.6g",
                  std::string(to_string(report.path)).c_str(), report.residual_inf_norm, err,
                  report.wall_seconds);
    return buf;
}

} // namespace fracvar
