// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/solve.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/LU>

#include "fracvar/errors.hpp"

namespace fracvar {
namespace {

constexpr double kPivotRelTol = 1e-13;

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0; }

double matrix_inf_norm(const Eigen::MatrixXd& A) {
    return A.size() ? A.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
}

SolveReport finish_report(const DiscretizedProblem& dp, const Eigen::VectorXd& interior,
                          double residual, int iterations, SolvePath path) {
    SolveReport r{Trajectory{dp.mesh, dp.full(interior)}, residual, iterations, path, 0.0, {}};
    if (dp.problem.has_exact()) r.error_vs_exact = max_norm_error(dp.problem, r.trajectory);
    return r;
}

SolveReport solve_affine(const DiscretizedProblem& dp, const SolveOptions& opts) {
    const LinearSystem sys = assemble_linear(dp);
    Eigen::VectorXd x = solve_linear(sys.A, sys.b);
    Eigen::VectorXd F = stationarity_residual(dp, x);
    int solves = 1;
    // A few rounds of refinement against the true residual.
    while (inf_norm(F) > opts.tol_residual && solves < 4) {
        x += solve_linear(sys.A, -F);
        F = stationarity_residual(dp, x);
        ++solves;
    }
    const double res = inf_norm(F);
    if (res > opts.tol_residual) {
        std::ostringstream msg;
        msg << "linear solve left residual " << res << " above tolerance " << opts.tol_residual;
        throw NonConvergenceError(msg.str(), x, res, solves);
    }
    return finish_report(dp, x, res, solves, SolvePath::linear);
}

} // namespace

std::string_view to_string(SolvePath path) {
    return path == SolvePath::linear ? "linear" : "newton";
}

bool detect_affine(const DiscretizedProblem& dp) {
    const Eigen::Index m = dp.unknowns();
    std::mt19937_64 rng(0x5eed0a11u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Eigen::VectorXd F0 = stationarity_residual(dp, Eigen::VectorXd::Zero(m));
    const double tol = 1e-9 * (1.0 + inf_norm(F0));
    for (int probe = 0; probe < 3; ++probe) {
        Eigen::VectorXd x(m), y(m);
        for (Eigen::Index j = 0; j < m; ++j) {
            x[j] = u(rng);
            y[j] = u(rng);
        }
        const Eigen::VectorXd defect = stationarity_residual(dp, x + y) -
                                       stationarity_residual(dp, x) -
                                       stationarity_residual(dp, y) + F0;
        if (!(inf_norm(defect) <= tol)) return false;
    }
    return true;
}

LinearSystem assemble_linear(const DiscretizedProblem& dp) {
    if (!detect_affine(dp)) {
        throw DispatchError("assemble_linear: stationarity residual of '" + dp.problem.name +
                            "' is not affine");
    }
    const Eigen::Index m = dp.unknowns();
    const Eigen::VectorXd F0 = stationarity_residual(dp, Eigen::VectorXd::Zero(m));
    LinearSystem sys{Eigen::MatrixXd(m, m), -F0};
    for (Eigen::Index j = 0; j < m; ++j) {
        sys.A.col(j) = stationarity_residual(dp, Eigen::VectorXd::Unit(m, j)) - F0;
    }
    return sys;
}

bool is_tridiagonal(const Eigen::MatrixXd& A, double tol) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            if ((i > j + 1 || j > i + 1) && !(std::abs(A(i, j)) <= tol)) return false;
        }
    }
    return true;
}

Eigen::VectorXd solve_tridiagonal(const Eigen::VectorXd& sub, const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& sup, const Eigen::VectorXd& rhs,
                                  double pivot_floor) {
    const Eigen::Index m = diag.size();
    if (sub.size() != m || sup.size() != m || rhs.size() != m) {
        throw DimensionError("solve_tridiagonal: diagonal and rhs sizes differ");
    }
    Eigen::VectorXd c(m), x(m);
    double pivot = diag[0];
    for (Eigen::Index i = 0; i < m; ++i) {
        if (i > 0) pivot = diag[i] - sub[i] * c[i - 1];
        if (!(std::abs(pivot) > pivot_floor)) {
            throw SingularMatrixError("solve_tridiagonal: vanishing pivot at index " +
                                          std::to_string(i),
                                      i);
        }
        c[i] = (i + 1 < m) ? sup[i] / pivot : 0.0;
        x[i] = (rhs[i] - (i > 0 ? sub[i] * x[i - 1] : 0.0)) / pivot;
    }
    for (Eigen::Index i = m - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

Eigen::VectorXd solve_linear(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (A.rows() != A.cols() || A.rows() != b.size()) {
        throw DimensionError("solve_linear: A must be square and match b");
    }
    const Eigen::Index m = A.rows();
    if (m == 0) return Eigen::VectorXd();
    const double floor = kPivotRelTol * matrix_inf_norm(A);

    if (m >= 3 && is_tridiagonal(A)) {
        Eigen::VectorXd sub = Eigen::VectorXd::Zero(m), sup = Eigen::VectorXd::Zero(m);
        for (Eigen::Index i = 1; i < m; ++i) {
            sub[i] = A(i, i - 1);
            sup[i - 1] = A(i - 1, i);
        }
        try {
            return solve_tridiagonal(sub, A.diagonal(), sup, b, floor);
        } catch (const SingularMatrixError&) {
            // No pivoting in the Thomas sweep; let the pivoted LU decide.
        }
    }

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const Eigen::MatrixXd& U = lu.matrixLU();
    for (Eigen::Index k = 0; k < m; ++k) {
        if (!(std::abs(U(k, k)) > floor)) {
            std::ostringstream msg;
            msg << "solve_linear: matrix is numerically singular (pivot " << k << " = " << U(k, k)
                << ", threshold " << floor << ")";
            throw SingularMatrixError(msg.str(), k);
        }
    }
    return lu.solve(b);
}

SolveReport solve_newton(const DiscretizedProblem& dp, const SolveOptions& opts) {
    if (dp.n() < 3) throw DomainError("solve_newton: need n >= 3");
    if (!(opts.tol_residual > 0.0) || opts.max_newton_iters < 1) {
        throw DomainError("solve_newton: invalid options");
    }
    const Eigen::Index m = dp.unknowns();
    const Trajectory guess = linear_interp_trajectory(dp.problem, dp.mesh);
    Eigen::VectorXd x = guess.values.segment(1, m);
    Eigen::VectorXd F = stationarity_residual(dp, x);
    double norm = inf_norm(F);
    int iter = 0;
    Eigen::MatrixXd J(m, m);

    while (norm > opts.tol_residual) {
        if (iter >= opts.max_newton_iters) {
            std::ostringstream msg;
            msg << "newton: no convergence after " << iter << " iterations, residual " << norm;
            throw NonConvergenceError(msg.str(), x, norm, iter);
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            const double step = opts.fd_jacobian_step * std::max(1.0, std::abs(x[j]));
            Eigen::VectorXd probe = x;
            probe[j] += step;
            J.col(j) = (stationarity_residual(dp, probe) - F) / (probe[j] - x[j]);
        }
        const Eigen::VectorXd delta = solve_linear(J, -F);

        double lambda = 1.0;
        Eigen::VectorXd trial, F_trial;
        double trial_norm = 0.0;
        while (true) {
            trial = x + lambda * delta;
            F_trial = stationarity_residual(dp, trial);
            trial_norm = inf_norm(F_trial);
            if (trial_norm < norm) break;
            lambda *= 0.5;
            if (lambda < opts.damping_min) {
                std::ostringstream msg;
                msg << "newton: line search stalled at iteration " << iter + 1 << ", residual "
                    << norm;
                throw NonConvergenceError(msg.str(), x, norm, iter);
            }
        }
        x = std::move(trial);
        F = std::move(F_trial);
        norm = trial_norm;
        ++iter;
    }
    return finish_report(dp, x, norm, iter, SolvePath::newton);
}

SolveReport solve(const DiscretizedProblem& dp, const SolveOptions& opts) {
    if (dp.n() < 3) throw DomainError("solve: need n >= 3, got " + std::to_string(dp.n()));
    const auto start = std::chrono::steady_clock::now();
    SolveReport report = [&] {
        switch (opts.force_path) {
        case PathChoice::linear:
            return solve_affine(dp, opts);
        case PathChoice::newton:
            return solve_newton(dp, opts);
        case PathChoice::automatic:
            break;
        }
        return detect_affine(dp) ? solve_affine(dp, opts) : solve_newton(dp, opts);
    }();
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SolveReport solve(const VariationalProblem& problem, int n, const SolveOptions& opts,
                  ResidualConvention convention) {
    if (n < 3) throw DomainError("solve: need n >= 3, got " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    SolveReport report = solve(discretize(problem, n, convention), opts);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double max_norm_error(const VariationalProblem& problem, const Trajectory& trajectory) {
    if (!problem.has_exact()) throw std::logic_error("max_norm_error: problem has no exact solution");
    double e = 0.0;
    for (int i = 1; i < trajectory.mesh.n(); ++i) {
        e = std::max(e, std::abs(problem.exact(trajectory.mesh.t(i)) - trajectory.values[i]));
    }
    return e;
}

} // namespace fracvar
