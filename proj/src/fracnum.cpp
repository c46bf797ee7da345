// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/fracnum.hpp"

namespace fracvar {

void GridSamples::check() const {
    if (values.size() < 2) throw DimensionError("GridSamples: need at least two samples");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("GridSamples: step must be positive");
    if (!values.allFinite()) throw DomainError("GridSamples: samples must be finite");
}

double rl_monomial(double p, double alpha, double t) {
    if (!(t > 0.0)) throw DomainError("rl_monomial: t must be positive");
    if (p < 0.0) throw DomainError("rl_monomial: p must be non-negative");
    if (!(p - alpha > -1.0)) throw DomainError("rl_monomial: need p - alpha > -1");
    return gamma(p + 1.0) / gamma(p + 1.0 - alpha) * std::pow(t, p - alpha);
}

} // namespace fracvar
