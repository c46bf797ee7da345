// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_ERRORS_HPP
#define FRACVAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace fracvar {

/// Argument outside the mathematical domain of an operation (pole of Γ,
/// order outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Grid index outside the range an operator accepts.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A sequence is too short or has the wrong size.
class DimensionError : public std::length_error {
public:
    using std::length_error::length_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, Eigen::Index pivot)
        : std::runtime_error(what), pivot_(pivot) {}

    /// Zero-based index of the offending pivot.
    Eigen::Index pivot() const noexcept { return pivot_; }

private:
    Eigen::Index pivot_;
};

/// Iterative solve stopped without meeting its residual tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, Eigen::VectorXd best_iterate,
                        double residual, int iterations)
        : std::runtime_error(what),
          best_(std::move(best_iterate)),
          residual_(residual),
          iterations_(iterations) {}

    const Eigen::VectorXd& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    Eigen::VectorXd best_;
    double residual_;
    int iterations_;
};

/// Raised when dispatching a non-affine residual to the linear path.
class DispatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fracvar

#endif // FRACVAR_ERRORS_HPP
