// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_ASSEMBLE_HPP
#define FRACVAR_ASSEMBLE_HPP

#include <Eigen/Core>

#include "fracvar/mesh.hpp"
#include "fracvar/model.hpp"
#include "fracvar/special.hpp"

namespace fracvar {

/// Upper limit of the fractional sum in ∂Ψ/∂x_i.
enum class ResidualConvention {
    generic,       ///< k = 0..n−i, the exact gradient of Ψ
    truncated, ///< k = 0..n−i−1 for i ≤ n−2 (k = 0..1 at i = n−1)
};

/// A problem bound to a mesh, with GL weights precomputed to index n.
struct DiscretizedProblem {
    VariationalProblem problem;
    Mesh mesh;
    GlWeights weights;
    ResidualConvention convention = ResidualConvention::generic;

    int n() const noexcept { return mesh.n(); }
    Eigen::Index unknowns() const noexcept { return mesh.n() - 1; }

    /// Interior x_1..x_{n−1} padded with the boundary values.
    Eigen::VectorXd full(const Eigen::VectorXd& interior) const;
};

DiscretizedProblem discretize(const VariationalProblem& problem, int n,
                              ResidualConvention convention = ResidualConvention::generic);

/// Ψ(x) = Σ_{i=1}^{n} h·L(t_i, x_i, D̃ᵅx_i, (x_i − x_{i−1})/h).
double psi(const DiscretizedProblem& dp, const Eigen::VectorXd& interior);

/// ∂Ψ/∂x_i for i = 1..n−1:
///   h·L_x[i] + h^{1−α} Σ_k w[k]·L_dax[i+k] + L_xdot[i] − L_xdot[i+1].
Eigen::VectorXd stationarity_residual(const DiscretizedProblem& dp, const Eigen::VectorXd& interior);

/// Discrete fractional Euler–Lagrange residual on a full trajectory x_0..x_n:
///   L_x[i] + h^{−α} Σ_k w[k]·L_dax[i+k] − (L_xdot[i+1] − L_xdot[i])/h,
/// which equals the stationarity residual divided by h.
Eigen::VectorXd el_residual(const DiscretizedProblem& dp, const Eigen::VectorXd& values);

/// Straight line between the boundary values.
Trajectory linear_interp_trajectory(const VariationalProblem& problem, const Mesh& mesh);

} // namespace fracvar

#endif // FRACVAR_ASSEMBLE_HPP
