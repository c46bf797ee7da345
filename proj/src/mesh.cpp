// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/mesh.hpp"

#include <cmath>
#include <string>

#include "fracvar/errors.hpp"

namespace fracvar {

Mesh::Mesh(double a, double b, int n) : a_(a), b_(b), n_(n), h_(0.0) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("Mesh: need finite a < b");
    }
    if (n < 2) throw DomainError("Mesh: need n >= 2, got " + std::to_string(n));
    h_ = (b - a) / n;
}

Eigen::VectorXd Mesh::nodes() const {
    Eigen::VectorXd t(n_ + 1);
    for (int i = 0; i <= n_; ++i) t[i] = this->t(i);
    return t;
}

} // namespace fracvar
