// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_REPORT_HPP
#define FRACVAR_REPORT_HPP

#include <ostream>
#include <string>

#include "fracvar/model.hpp"
#include "fracvar/solve.hpp"

namespace fracvar {

/// %.17g rendering used by every machine-readable output.
std::string format_real(double v);

/// Columns i,t,x plus exact,abs_err when the problem has an exact solution.
void write_solution_csv(std::ostream& out, const VariationalProblem& problem,
                        const SolveReport& report);

void write_solution_json(std::ostream& out, const VariationalProblem& problem,
                         const SolveReport& report);

/// "path=<linear|newton> residual=<r> E=<e|n/a> T=<secs>"
std::string summary_line(const SolveReport& report);

} // namespace fracvar

#endif // FRACVAR_REPORT_HPP
