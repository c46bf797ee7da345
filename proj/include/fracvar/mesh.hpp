// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_MESH_HPP
#define FRACVAR_MESH_HPP

#include <Eigen/Core>

namespace fracvar {

/// Equispaced grid a = t_0 < ... < t_n = b.
class Mesh {
public:
    /// Throws DomainError unless b > a and n >= 2.
    Mesh(double a, double b, int n);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n() const noexcept { return n_; }
    double h() const noexcept { return h_; }

    /// t_i = a + i·h, with t_n returned as b itself.
    double t(Eigen::Index i) const noexcept { return i == n_ ? b_ : a_ + static_cast<double>(i) * h_; }

    Eigen::VectorXd nodes() const;

private:
    double a_;
    double b_;
    int n_;
    double h_;
};

} // namespace fracvar

#endif // FRACVAR_MESH_HPP
