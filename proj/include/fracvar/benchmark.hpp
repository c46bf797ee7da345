// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_BENCHMARK_HPP
#define FRACVAR_BENCHMARK_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fracvar/assemble.hpp"
#include "fracvar/solve.hpp"

namespace fracvar {

/// Published error/timing table for the three built-in examples. `n`
/// counts mesh nodes, so a row is solved on n − 1 intervals.
struct ReferenceRow {
    int example;
    int n;
    double T;
    double E;
};

const std::vector<ReferenceRow>& reference_table();
std::optional<ReferenceRow> find_reference(int example, int n);

/// How a row's `n` maps onto the mesh.
enum class MeshCount {
    nodes,     ///< n mesh nodes, n − 1 intervals (the reference table's reading)
    intervals, ///< n intervals
};

struct RowSpec {
    int example;
    int n;
};

/// Default row set: every row of the reference table.
std::vector<RowSpec> default_rows();

/// Parses "1:5,3:20" into row specs. Throws std::invalid_argument.
std::vector<RowSpec> parse_rows(std::string_view spec);

struct BenchmarkOptions {
    MeshCount count = MeshCount::nodes;
    ResidualConvention convention = ResidualConvention::generic;
    SolveOptions solve;
    bool parallel = false;
};

struct BenchmarkRow {
    std::string example;
    int n = 0;
    int intervals = 0;
    double T = 0.0;
    double E = 0.0;
    double residual = 0.0;
    SolvePath path = SolvePath::linear;
    std::optional<double> E_ref;
    /// (E − E_ref)/E_ref.
    std::optional<double> rel_dev;
    bool strict = false;   ///< within ±10% of the reference
    bool fallback = false; ///< order of magnitude (factor 2) and monotone in n
    bool passed = false;
    std::string error; ///< non-empty when the solve failed
};

/// Relative tolerance against the reference E.
inline constexpr double kReferenceRelTol = 0.10;

BenchmarkRow run_row(const RowSpec& spec, const BenchmarkOptions& opts);

/// Runs every row, then grades them: a row passes strictly within ±10% of
/// its reference; otherwise it may pass by the fallback rule (within a
/// factor of 2 of the reference, with E strictly decreasing in n across the
/// rows of its example). Rows without a reference pass when the solve
/// succeeds and E is monotone.
std::vector<BenchmarkRow> run_benchmark(const std::vector<RowSpec>& rows,
                                        const BenchmarkOptions& opts);

bool all_passed(const std::vector<BenchmarkRow>& rows);
bool any_fallback(const std::vector<BenchmarkRow>& rows);

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
void write_benchmark_markdown(std::ostream& out, const std::vector<BenchmarkRow>& rows);

} // namespace fracvar

#endif // FRACVAR_BENCHMARK_HPP
