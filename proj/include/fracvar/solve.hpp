// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_SOLVE_HPP
#define FRACVAR_SOLVE_HPP

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "fracvar/assemble.hpp"
#include "fracvar/model.hpp"

namespace fracvar {

enum class SolvePath { linear, newton };
enum class PathChoice { automatic, linear, newton };

std::string_view to_string(SolvePath path);

struct SolveOptions {
    double tol_residual = 1e-10;
    int max_newton_iters = 100;
    /// Forward-difference step, scaled per unknown by max(1, |x_j|).
    double fd_jacobian_step = 1e-7;
    /// Smallest damping factor tried by the halving line search.
    double damping_min = 1.0 / 1024.0;
    PathChoice force_path = PathChoice::automatic;
};

struct SolveReport {
    Trajectory trajectory;
    double residual_inf_norm = 0.0;
    int iterations = 0;
    SolvePath path = SolvePath::linear;
    double wall_seconds = 0.0;
    /// max_{1≤i≤n−1} |x(t_i) − x_i|, present when the problem has an exact solution.
    std::optional<double> error_vs_exact;
};

struct LinearSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
};

/// True when the stationarity residual is affine in the unknowns, judged by
/// F(x+y) − F(x) − F(y) + F(0) ≈ 0 on three random probe pairs.
bool detect_affine(const DiscretizedProblem& dp);

/// A·x = b equivalent to F(x) = 0 for an affine residual. Columns are probed
/// as F(e_j) − F(0). Throws DispatchError if the residual is not affine.
LinearSystem assemble_linear(const DiscretizedProblem& dp);

/// True if every entry outside the three central diagonals is at most `tol`
/// in magnitude.
bool is_tridiagonal(const Eigen::MatrixXd& A, double tol = 1e-14);

/// Thomas algorithm on a tridiagonal system given by its sub-, main and
/// super-diagonal (sub[0] and sup[m−1] are ignored). Throws
/// SingularMatrixError when a pivot magnitude is at most `pivot_floor`.
Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& sub, const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& sup, const Eigen::VectorXd& rhs,
                                  double pivot_floor = 0.0);

/// Dense LU with partial pivoting, or the Thomas algorithm when A is
/// tridiagonal. A pivot at or below 1e−13·‖A‖∞ raises SingularMatrixError.
Eigen::VectorXd solve_linear(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

/// Damped Newton iteration with a forward-difference Jacobian, started from
/// the straight line between the boundary values.
SolveReport solve_newton(const DiscretizedProblem& dp, const SolveOptions& opts = {});

/// Full pipeline on a prepared discretization: path dispatch, solve, report.
SolveReport solve(const DiscretizedProblem& dp, const SolveOptions& opts = {});

/// Discretize `problem` on n intervals and solve.
SolveReport solve(const VariationalProblem& problem, int n, const SolveOptions& opts = {},
                  ResidualConvention convention = ResidualConvention::generic);

/// Maximum interior deviation from the exact solution.
double max_norm_error(const VariationalProblem& problem, const Trajectory& trajectory);

} // namespace fracvar

#endif // FRACVAR_SOLVE_HPP
