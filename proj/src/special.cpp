// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracvar/errors.hpp"

namespace fracvar {
namespace {

// Lanczos approximation with N = 13, g = 6.024680040776729583740234375
// (Boost.Math lanczos13m53). The sum is the rational function
// num(z)/den(z) with den(z) = z(z+1)⋯(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr std::array<double, 13> kLanczosDen = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,  357423.0,    32670.0,
    1925.0,    66.0,       1.0,
};

double lanczos_sum(double z) {
    // For z > 1 evaluate in 1/z to keep the polynomial terms bounded.
    double num = 0.0;
    double den = 0.0;
    if (z <= 1.0) {
        for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
            num = num * z + kLanczosNum[i];
            den = den * z + kLanczosDen[i];
        }
    } else {
        const double zi = 1.0 / z;
        for (std::size_t i = 0; i < kLanczosNum.size(); ++i) {
            num = num * zi + kLanczosNum[i];
            den = den * zi + kLanczosDen[i];
        }
    }
    return num / den;
}

double gamma_positive(double z) {
    const double zgh = z + kLanczosG - 0.5;
    const double exponent = z - 0.5;
    double result = lanczos_sum(z);
    if (z > 140.0) {
        // Split the power so the intermediate does not overflow.
        const double half = std::pow(zgh, exponent / 2.0);
        result *= half / std::exp(zgh);
        result *= half;
    } else {
        result *= std::pow(zgh, exponent) / std::exp(zgh);
    }
    return result;
}

// sin(πz) with argument reduction so that integers map to exact zeros.
double sin_pi(double z) {
    double r = std::fmod(z, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(std::numbers::pi * r);
}

} // namespace

double gamma(double z) {
    if (std::isnan(z)) return z;
    if (z <= 0.0 && z == std::floor(z)) {
        throw DomainError("gamma: pole at z = " + std::to_string(z));
    }
    if (z > 0.0) return gamma_positive(z);
    return std::numbers::pi / (sin_pi(z) * gamma_positive(1.0 - z));
}

double binom_real(double alpha, int k) {
    if (k < 0) throw DomainError("binom_real: k must be non-negative");
    double result = 1.0;
    for (int j = 0; j < k; ++j) {
        result *= (alpha - j) / (j + 1);
    }
    return result;
}

Eigen::VectorXd GlWeights::partial_sums() const {
    Eigen::VectorXd s(w.size());
    double acc = 0.0;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        acc += w[k];
        s[k] = acc;
    }
    return s;
}

GlWeights gl_weights(double alpha, int m) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("gl_weights: alpha must lie in (0,1), got " + std::to_string(alpha));
    }
    if (m < 0) throw DomainError("gl_weights: count must be non-negative");
    GlWeights out;
    out.alpha = alpha;
    out.w.resize(m + 1);
    out.w[0] = 1.0;
    for (int k = 1; k <= m; ++k) {
        out.w[k] = out.w[k - 1] * ((k - 1 - alpha) / k);
    }
    return out;
}

} // namespace fracvar
