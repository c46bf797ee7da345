// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/assemble.hpp"

#include <cmath>
#include <string>

#include "fracvar/errors.hpp"
#include "fracvar/fracnum.hpp"

namespace fracvar {
namespace {

// Lagrangian partials sampled at nodes 1..n (entry 0 is unused).
struct NodePartials {
    Eigen::VectorXd d_x;
    Eigen::VectorXd d_dax;
    Eigen::VectorXd d_xdot;
};

NodePartials sample_partials(const DiscretizedProblem& dp, const Eigen::VectorXd& x) {
    const int n = dp.n();
    const double h = dp.mesh.h();
    const Lagrangian& L = dp.problem.lagrangian;
    const Eigen::VectorXd dax = gl_left_all(x, h, dp.weights);
    NodePartials out{Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n + 1),
                     Eigen::VectorXd::Zero(n + 1)};
    for (int j = 1; j <= n; ++j) {
        const double t = dp.mesh.t(j);
        const double xdot = (x[j] - x[j - 1]) / h;
        out.d_x[j] = L.d_x(t, x[j], dax[j], xdot);
        out.d_dax[j] = L.d_dax(t, x[j], dax[j], xdot);
        if (L.uses_xdot) out.d_xdot[j] = L.d_xdot(t, x[j], dax[j], xdot);
    }
    return out;
}

int fractional_upper(const DiscretizedProblem& dp, int i) {
    const int n = dp.n();
    if (dp.convention == ResidualConvention::truncated && i <= n - 2) return n - i - 1;
    return n - i;
}

void require_interior(const DiscretizedProblem& dp, const Eigen::VectorXd& interior) {
    if (interior.size() != dp.unknowns()) {
        throw DimensionError("expected " + std::to_string(dp.unknowns()) +
                             " interior values, got " + std::to_string(interior.size()));
    }
}

} // namespace

Eigen::VectorXd DiscretizedProblem::full(const Eigen::VectorXd& interior) const {
    require_interior(*this, interior);
    Eigen::VectorXd x(n() + 1);
    x[0] = problem.xa;
    x.segment(1, unknowns()) = interior;
    x[n()] = problem.xb;
    return x;
}

DiscretizedProblem discretize(const VariationalProblem& problem, int n,
                              ResidualConvention convention) {
    Mesh mesh(problem.a, problem.b, n);
    return DiscretizedProblem{problem, mesh, gl_weights(problem.alpha, n), convention};
}

double psi(const DiscretizedProblem& dp, const Eigen::VectorXd& interior) {
    const Eigen::VectorXd x = dp.full(interior);
    const double h = dp.mesh.h();
    const Eigen::VectorXd dax = gl_left_all(x, h, dp.weights);
    const Lagrangian& L = dp.problem.lagrangian;
    double sum = 0.0;
    for (int i = 1; i <= dp.n(); ++i) {
        sum += h * L.eval(dp.mesh.t(i), x[i], dax[i], (x[i] - x[i - 1]) / h);
    }
    return sum;
}

Eigen::VectorXd stationarity_residual(const DiscretizedProblem& dp, const Eigen::VectorXd& interior) {
    const Eigen::VectorXd x = dp.full(interior);
    const NodePartials p = sample_partials(dp, x);
    const int n = dp.n();
    const double h = dp.mesh.h();
    const double frac_scale = std::pow(h, 1.0 - dp.weights.alpha);
    Eigen::VectorXd F(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        double conv = 0.0;
        for (int k = 0; k <= fractional_upper(dp, i); ++k) conv += dp.weights[k] * p.d_dax[i + k];
        F[i - 1] = h * p.d_x[i] + frac_scale * conv + (p.d_xdot[i] - p.d_xdot[i + 1]);
    }
    return F;
}

Eigen::VectorXd el_residual(const DiscretizedProblem& dp, const Eigen::VectorXd& values) {
    const int n = dp.n();
    if (values.size() != n + 1) {
        throw DimensionError("el_residual: trajectory has " + std::to_string(values.size()) +
                             " values, mesh has " + std::to_string(n + 1) + " nodes");
    }
    const NodePartials p = sample_partials(dp, values);
    const double h = dp.mesh.h();
    const double frac_scale = std::pow(h, -dp.weights.alpha);
    Eigen::VectorXd R(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        double conv = 0.0;
        for (int k = 0; k <= fractional_upper(dp, i); ++k) conv += dp.weights[k] * p.d_dax[i + k];
        R[i - 1] = p.d_x[i] + frac_scale * conv - (p.d_xdot[i + 1] - p.d_xdot[i]) / h;
    }
    return R;
}

Trajectory linear_interp_trajectory(const VariationalProblem& problem, const Mesh& mesh) {
    const int n = mesh.n();
    Eigen::VectorXd x(n + 1);
    for (int i = 0; i <= n; ++i) {
        x[i] = problem.xa + (problem.xb - problem.xa) * static_cast<double>(i) / n;
    }
    x[0] = problem.xa;
    x[n] = problem.xb;
    return Trajectory{mesh, x};
}

} // namespace fracvar
