// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: solve, benchmark, weights, deriv.

#include <climits>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fracvar/fracvar.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitConfig = 4;

struct SolveArgs {
    std::optional<int> example;
    std::optional<std::string> problem;
    int n = 0;
    std::string out;
    std::string force_path = "auto";
    double tol = 1e-10;
    std::string format = "csv";
    std::string convention = "generic";
};

struct BenchmarkArgs {
    std::string rows;
    std::string out;
    std::string format = "md";
    std::string mesh_count = "nodes";
    std::string convention = "generic";
    bool parallel = false;
};

struct WeightsArgs {
    double alpha = 0.0;
    int count = 0;
};

struct DerivArgs {
    double alpha = 0.0;
    int n = 0;
    double monomial = 0.0;
    std::string side = "left";
    std::string out;
};

fracvar::ResidualConvention parse_convention(const std::string& s) {
    return s == "truncated" ? fracvar::ResidualConvention::truncated
                            : fracvar::ResidualConvention::generic;
}

bool write_output(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

int run_solve(const SolveArgs& args) {
    fracvar::VariationalProblem problem;
    if (args.example) {
        problem = fracvar::builtin_problem(std::to_string(*args.example));
    } else {
        try {
            problem = fracvar::to_problem(fracvar::load_problem_config(*args.problem));
        } catch (const fracvar::ConfigError& e) {
            std::cerr << "config error (" << e.where() << "): " << e.what() << '\n';
            return kExitConfig;
        }
        if (const auto findings = fracvar::validate(problem); !findings.empty()) {
            for (const auto& f : findings) std::cerr << "config error: " << f << '\n';
            return kExitConfig;
        }
    }

    fracvar::SolveOptions opts;
    opts.tol_residual = args.tol;
    if (args.force_path == "linear") opts.force_path = fracvar::PathChoice::linear;
    else if (args.force_path == "newton") opts.force_path = fracvar::PathChoice::newton;

    std::optional<fracvar::SolveReport> report;
    try {
        report = fracvar::solve(problem, args.n, opts, parse_convention(args.convention));
    } catch (const fracvar::NonConvergenceError& e) {
        std::cerr << "solver did not converge: " << e.what() << " (final residual " << e.residual()
                  << ")\n";
        return kExitSolver;
    } catch (const fracvar::expr::EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    }

    if (!args.out.empty()) {
        std::ostringstream body;
        if (args.format == "json") fracvar::write_solution_json(body, problem, *report);
        else fracvar::write_solution_csv(body, problem, *report);
        if (!write_output(args.out, body.str())) return kExitUsage;
    }
    std::cout << fracvar::summary_line(*report) << '\n';
    return kExitOk;
}

int run_benchmark(const BenchmarkArgs& args) {
    std::vector<fracvar::RowSpec> rows;
    try {
        rows = args.rows.empty() ? fracvar::default_rows() : fracvar::parse_rows(args.rows);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: --rows: " << e.what() << '\n';
        return kExitUsage;
    }
    fracvar::BenchmarkOptions opts;
    opts.count = args.mesh_count == "intervals" ? fracvar::MeshCount::intervals
                                                : fracvar::MeshCount::nodes;
    opts.convention = parse_convention(args.convention);
    opts.parallel = args.parallel;

    const auto results = fracvar::run_benchmark(rows, opts);
    auto render = [&](const std::vector<fracvar::BenchmarkRow>& r) {
        std::ostringstream s;
        if (args.format == "csv") fracvar::write_benchmark_csv(s, r);
        else fracvar::write_benchmark_markdown(s, r);
        return s.str();
    };
    std::string text = render(results);
    if (fracvar::any_fallback(results) && opts.convention == fracvar::ResidualConvention::generic) {
        fracvar::BenchmarkOptions alt = opts;
        alt.convention = fracvar::ResidualConvention::truncated;
        text += args.format == "csv" ? "# truncated convention\n"
                                     : "\nTruncated residual convention:\n\n";
        text += render(fracvar::run_benchmark(rows, alt));
    }
    std::cout << text;
    if (!args.out.empty() && !write_output(args.out, text)) return kExitUsage;

    if (!fracvar::all_passed(results)) {
        for (const auto& r : results) {
            if (r.passed) continue;
            std::cerr << "row failed: " << r.example << " n=" << r.n << " E=" << r.E;
            if (r.E_ref) std::cerr << " reference=" << *r.E_ref;
            if (!r.error.empty()) std::cerr << " (" << r.error << ")";
            std::cerr << '\n';
        }
        return kExitSolver;
    }
    return kExitOk;
}

int run_weights(const WeightsArgs& args) {
    if (!(args.alpha > 0.0 && args.alpha < 1.0)) {
        std::cerr << "error: --alpha must lie in (0,1)\n";
        return kExitUsage;
    }
    const fracvar::GlWeights w = fracvar::gl_weights(args.alpha, args.count);
    const Eigen::VectorXd s = w.partial_sums();
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        std::cout << k << ',' << fracvar::format_real(w[k]) << ',' << fracvar::format_real(s[k])
                  << '\n';
    }
    return kExitOk;
}

int run_deriv(const DerivArgs& args) {
    if (!(args.alpha > 0.0 && args.alpha < 1.0)) {
        std::cerr << "error: --alpha must lie in (0,1)\n";
        return kExitUsage;
    }
    const fracvar::Mesh mesh(0.0, 1.0, args.n);
    fracvar::GridSamples samples{mesh.h(), Eigen::VectorXd(args.n + 1)};
    for (int i = 0; i <= args.n; ++i) samples.values[i] = std::pow(mesh.t(i), args.monomial);
    const fracvar::GlWeights w = fracvar::gl_weights(args.alpha, args.n);

    const bool shifted = args.side == "shifted";
    const bool right = args.side == "right";
    const int last = shifted ? args.n - 1 : args.n;
    std::ostringstream out;
    out << "i,t,approx,exact,abs_err\n";
    for (int i = 0; i <= last; ++i) {
        const double t = mesh.t(i);
        const double approx = right     ? fracvar::gl_right(samples, w, i)
                              : shifted ? fracvar::gl_left_shifted(samples, w, i)
                                        : fracvar::gl_left(samples, w, i);
        out << i << ',' << fracvar::format_real(t) << ',' << fracvar::format_real(approx) << ',';
        if (!right && t > 0.0) {
            const double exact = fracvar::rl_monomial(args.monomial, args.alpha, t);
            out << fracvar::format_real(exact) << ',' << fracvar::format_real(std::abs(approx - exact));
        } else {
            out << ',';
        }
        out << '\n';
    }
    if (args.out.empty()) std::cout << out.str();
    else if (!write_output(args.out, out.str())) return kExitUsage;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direct solver for fractional variational problems"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve a built-in or configured problem");
    auto* ex_opt = solve->add_option("--example", solve_args.example, "Built-in example (1, 2 or 3)")
                       ->check(CLI::Range(1, 3));
    auto* pr_opt = solve->add_option("--problem", solve_args.problem, "Problem config (JSON)");
    ex_opt->excludes(pr_opt);
    solve->add_option("--n", solve_args.n, "Number of mesh intervals (>= 3)")
        ->required()
        ->check(CLI::Range(3, INT_MAX));
    solve->add_option("--out", solve_args.out, "Output file for per-node results");
    solve->add_option("--force-path", solve_args.force_path, "auto, linear or newton")
        ->check(CLI::IsMember({"auto", "linear", "newton"}));
    solve->add_option("--tol", solve_args.tol, "Residual tolerance")
        ->check(CLI::PositiveNumber);
    solve->add_option("--format", solve_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--convention", solve_args.convention, "generic or truncated")
        ->check(CLI::IsMember({"generic", "truncated"}));

    BenchmarkArgs bench_args;
    auto* bench = app.add_subcommand("benchmark", "Reproduce the reference error table");
    bench->add_option("--rows", bench_args.rows, "Rows as example:n[,example:n...]");
    bench->add_option("--out", bench_args.out, "Also write the table to this file");
    bench->add_option("--format", bench_args.format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    bench->add_option("--mesh-count", bench_args.mesh_count,
                      "Read n as mesh nodes (default) or intervals")
        ->check(CLI::IsMember({"nodes", "intervals"}));
    bench->add_option("--convention", bench_args.convention, "generic or truncated")
        ->check(CLI::IsMember({"generic", "truncated"}));
    bench->add_flag("--parallel", bench_args.parallel, "Run rows concurrently");

    WeightsArgs weights_args;
    auto* weights = app.add_subcommand("weights", "List Grünwald–Letnikov weights");
    weights->add_option("--alpha", weights_args.alpha, "Order in (0,1)")->required();
    weights->add_option("--count", weights_args.count, "Highest index m")
        ->required()
        ->check(CLI::NonNegativeNumber);

    DerivArgs deriv_args;
    auto* deriv = app.add_subcommand("deriv", "Approximate the half-derivative of t^p on [0,1]");
    deriv->add_option("--alpha", deriv_args.alpha, "Order in (0,1)")->required();
    deriv->add_option("--n", deriv_args.n, "Number of intervals")
        ->required()
        ->check(CLI::Range(2, INT_MAX));
    deriv->add_option("--monomial", deriv_args.monomial, "Exponent p >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    deriv->add_option("--side", deriv_args.side, "left, right or shifted")
        ->check(CLI::IsMember({"left", "right", "shifted"}));
    deriv->add_option("--out", deriv_args.out, "Output CSV (default: stdout)");

    try {
        app.parse(argc, argv);
        if (solve->parsed() && !solve_args.example && !solve_args.problem) {
            throw CLI::RequiredError("one of --example or --problem");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (bench->parsed()) return run_benchmark(bench_args);
        if (weights->parsed()) return run_weights(weights_args);
        return run_deriv(deriv_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
}
