// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_MODEL_HPP
#define FRACVAR_MODEL_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fracvar/mesh.hpp"

namespace fracvar {

/// Scalar function of (t, x, ₐD_tᵅx, ẋ).
using LagrangianFn = std::function<double(double t, double x, double dax, double xdot)>;

/// Integrand of the functional together with its partial derivatives.
///
/// When `uses_xdot` is false the evaluators ignore their ẋ argument and
/// `d_xdot` is identically zero.
struct Lagrangian {
    LagrangianFn eval;
    LagrangianFn d_x;
    LagrangianFn d_dax;
    LagrangianFn d_xdot;
    bool uses_xdot = false;
};

/// minimize ∫_a^b L(t, x, ₐD_tᵅx, ẋ) dt subject to x(a) = xa, x(b) = xb.
struct VariationalProblem {
    std::string name;
    double a = 0.0;
    double b = 1.0;
    double alpha = 0.5;
    double xa = 0.0;
    double xb = 1.0;
    Lagrangian lagrangian;
    std::function<double(double)> exact; // empty when no closed form is known

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Values on every node of a mesh, boundary entries included.
struct Trajectory {
    Mesh mesh;
    Eigen::VectorXd values;
};

/// (ₒD_t^{0.5}x − 2/Γ(2.5)·t^{1.5})² on [0,1], x(0)=0, x(1)=1; minimizer t².
VariationalProblem example1();

/// ₒD_t^{0.5}x − ẋ² on [0,1], x(0)=0, x(1)=1.
VariationalProblem example2();

/// (ₒD_t^{0.5}x − φ(t))⁴ on [0,1], x(0)=0, x(1)=1, where φ is the exact
/// half-derivative of the minimizer 16t⁵ − 20t³ + 5t.
VariationalProblem example3();

/// φ(t) of example3.
double example3_phi(double t);

/// Built-in lookup by name ("example1", "1", ...). Throws std::invalid_argument.
VariationalProblem builtin_problem(const std::string& name);

/// Invariant violations of a problem; empty when the problem is valid.
std::vector<std::string> validate(const VariationalProblem& problem);

} // namespace fracvar

#endif // FRACVAR_MODEL_HPP
