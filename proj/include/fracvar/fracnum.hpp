// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_FRACNUM_HPP
#define FRACVAR_FRACNUM_HPP

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "fracvar/errors.hpp"
#include "fracvar/special.hpp"

namespace fracvar {

/// Samples x_0..x_n of a function at t_i = a + i·h.
struct GridSamples {
    double h = 0.0;
    Eigen::VectorXd values;

    Eigen::Index last() const { return values.size() - 1; }

    /// Throws DimensionError / DomainError when n < 1, h <= 0 or a value is
    /// not finite.
    void check() const;
};

namespace detail {

inline void require_index(Eigen::Index i, Eigen::Index lo, Eigen::Index hi, const char* op) {
    if (i < lo || i > hi) {
        throw IndexError(std::string(op) + ": index " + std::to_string(i) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

inline void require_weights(const GlWeights& w, Eigen::Index top, const char* op) {
    if (w.size() <= top) {
        throw DimensionError(std::string(op) + ": need weights up to index " +
                             std::to_string(top) + ", have " + std::to_string(w.size()));
    }
}

} // namespace detail

// The operators below truncate the Grünwald–Letnikov series at the grid
// boundary: samples outside [a, b] are taken to be zero.

/// Left GL approximation h^{−α} Σ_{k=0}^{i} w[k] x[i−k].
template <typename Derived>
typename Derived::Scalar gl_left(const Eigen::MatrixBase<Derived>& x, double h,
                                 const GlWeights& w, Eigen::Index i) {
    detail::require_index(i, 0, x.size() - 1, "gl_left");
    detail::require_weights(w, i, "gl_left");
    typename Derived::Scalar acc(0);
    for (Eigen::Index k = 0; k <= i; ++k) acc += w[k] * x(i - k);
    return acc / std::pow(h, w.alpha);
}

/// Right GL approximation h^{−α} Σ_{k=0}^{n−i} w[k] x[i+k].
template <typename Derived>
typename Derived::Scalar gl_right(const Eigen::MatrixBase<Derived>& x, double h,
                                  const GlWeights& w, Eigen::Index i) {
    const Eigen::Index n = x.size() - 1;
    detail::require_index(i, 0, n, "gl_right");
    detail::require_weights(w, n - i, "gl_right");
    typename Derived::Scalar acc(0);
    for (Eigen::Index k = 0; k <= n - i; ++k) acc += w[k] * x(i + k);
    return acc / std::pow(h, w.alpha);
}

/// Shifted left GL approximation h^{−α} Σ_{k=0}^{i} w[k] x[i−k+1].
/// Defined for i ≤ n−1 only, since the k = 0 term reads x[i+1].
template <typename Derived>
typename Derived::Scalar gl_left_shifted(const Eigen::MatrixBase<Derived>& x, double h,
                                         const GlWeights& w, Eigen::Index i) {
    detail::require_index(i, 0, x.size() - 2, "gl_left_shifted");
    detail::require_weights(w, i, "gl_left_shifted");
    typename Derived::Scalar acc(0);
    for (Eigen::Index k = 0; k <= i; ++k) acc += w[k] * x(i - k + 1);
    return acc / std::pow(h, w.alpha);
}

/// Left GL approximation at every node 0..n.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> gl_left_all(
    const Eigen::MatrixBase<Derived>& x, double h, const GlWeights& w) {
    const Eigen::Index n = x.size() - 1;
    detail::require_weights(w, n, "gl_left_all");
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out(x.size());
    const double scale = std::pow(h, -w.alpha);
    for (Eigen::Index i = 0; i <= n; ++i) {
        typename Derived::Scalar acc(0);
        for (Eigen::Index k = 0; k <= i; ++k) acc += w[k] * x(i - k);
        out(i) = acc * scale;
    }
    return out;
}

inline double gl_left(const GridSamples& s, const GlWeights& w, Eigen::Index i) {
    return gl_left(s.values, s.h, w, i);
}
inline double gl_right(const GridSamples& s, const GlWeights& w, Eigen::Index i) {
    return gl_right(s.values, s.h, w, i);
}
inline double gl_left_shifted(const GridSamples& s, const GlWeights& w, Eigen::Index i) {
    return gl_left_shifted(s.values, s.h, w, i);
}

/// Closed-form left Riemann–Liouville derivative of t^p anchored at 0:
/// Γ(p+1)/Γ(p+1−α)·t^{p−α}.
double rl_monomial(double p, double alpha, double t);

} // namespace fracvar

#endif // FRACVAR_FRACNUM_HPP
