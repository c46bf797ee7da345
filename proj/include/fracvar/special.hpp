// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_SPECIAL_HPP
#define FRACVAR_SPECIAL_HPP

#include <Eigen/Core>

namespace fracvar {

/// Gamma function for real arguments.
///
/// Positive arguments use a 13-term Lanczos rational approximation
/// (g ≈ 6.0247), accurate to a few ulp over the range the library needs.
/// Non-positive non-integer arguments go through the reflection identity
/// Γ(z)Γ(1−z) = π / sin(πz). Throws DomainError at the poles 0, −1, −2, ...
double gamma(double z);

/// Generalized binomial coefficient α(α−1)⋯(α−k+1)/k!; 1 for k = 0.
double binom_real(double alpha, int k);

/// Grünwald–Letnikov coefficient sequence w[k] = (−1)^k C(α, k), k = 0..m.
struct GlWeights {
    double alpha = 0.0;
    Eigen::VectorXd w;

    Eigen::Index size() const { return w.size(); }
    double operator[](Eigen::Index k) const { return w[k]; }

    /// S_k = w[0] + ... + w[k].
    Eigen::VectorXd partial_sums() const;
};

/// Weights w[0..m] by the recurrence w[k] = w[k−1]·(k−1−α)/k.
/// Throws DomainError unless 0 < alpha < 1, and for m < 0.
GlWeights gl_weights(double alpha, int m);

} // namespace fracvar

#endif // FRACVAR_SPECIAL_HPP
