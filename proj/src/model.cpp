// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fracvar/fracnum.hpp"
#include "fracvar/special.hpp"

namespace fracvar {

VariationalProblem example1() {
    const double c = 2.0 / gamma(2.5);
    VariationalProblem p;
    p.name = "example1";
    p.a = 0.0;
    p.b = 1.0;
    p.alpha = 0.5;
    p.xa = 0.0;
    p.xb = 1.0;
    p.lagrangian.eval = [c](double t, double, double dax, double) {
        const double r = dax - c * std::pow(t, 1.5);
        return r * r;
    };
    p.lagrangian.d_x = [](double, double, double, double) { return 0.0; };
    p.lagrangian.d_dax = [c](double t, double, double dax, double) {
        return 2.0 * (dax - c * std::pow(t, 1.5));
    };
    p.lagrangian.d_xdot = [](double, double, double, double) { return 0.0; };
    p.lagrangian.uses_xdot = false;
    p.exact = [](double t) { return t * t; };
    return p;
}

VariationalProblem example2() {
    const double c = 1.0 / (2.0 * gamma(2.5));
    VariationalProblem p;
    p.name = "example2";
    p.a = 0.0;
    p.b = 1.0;
    p.alpha = 0.5;
    p.xa = 0.0;
    p.xb = 1.0;
    p.lagrangian.eval = [](double, double, double dax, double xdot) { return dax - xdot * xdot; };
    p.lagrangian.d_x = [](double, double, double, double) { return 0.0; };
    p.lagrangian.d_dax = [](double, double, double, double) { return 1.0; };
    p.lagrangian.d_xdot = [](double, double, double, double xdot) { return -2.0 * xdot; };
    p.lagrangian.uses_xdot = true;
    p.exact = [c](double t) { return -c * std::pow(1.0 - t, 1.5) + (1.0 - c) * t + c; };
    return p;
}

double example3_phi(double t) {
    if (t <= 0.0) return 0.0;
    return 16.0 * rl_monomial(5.0, 0.5, t) - 20.0 * rl_monomial(3.0, 0.5, t) +
           5.0 * rl_monomial(1.0, 0.5, t);
}

VariationalProblem example3() {
    VariationalProblem p;
    p.name = "example3";
    p.a = 0.0;
    p.b = 1.0;
    p.alpha = 0.5;
    p.xa = 0.0;
    p.xb = 1.0;
    p.lagrangian.eval = [](double t, double, double dax, double) {
        const double r = dax - example3_phi(t);
        const double r2 = r * r;
        return r2 * r2;
    };
    p.lagrangian.d_x = [](double, double, double, double) { return 0.0; };
    p.lagrangian.d_dax = [](double t, double, double dax, double) {
        const double r = dax - example3_phi(t);
        return 4.0 * r * r * r;
    };
    p.lagrangian.d_xdot = [](double, double, double, double) { return 0.0; };
    p.lagrangian.uses_xdot = false;
    p.exact = [](double t) { return 16.0 * std::pow(t, 5) - 20.0 * std::pow(t, 3) + 5.0 * t; };
    return p;
}

VariationalProblem builtin_problem(const std::string& name) {
    if (name == "example1" || name == "1") return example1();
    if (name == "example2" || name == "2") return example2();
    if (name == "example3" || name == "3") return example3();
    throw std::invalid_argument("unknown built-in problem '" + name + "'");
}

namespace {

double central_difference(const LagrangianFn& f, double t, double x, double dax, double xdot,
                          int arg) {
    double v[4] = {t, x, dax, xdot};
    const double step = 1e-6 * std::max(1.0, std::abs(v[arg]));
    double up[4] = {t, x, dax, xdot};
    double dn[4] = {t, x, dax, xdot};
    up[arg] += step;
    dn[arg] -= step;
    return (f(up[0], up[1], up[2], up[3]) - f(dn[0], dn[1], dn[2], dn[3])) / (2.0 * step);
}

} // namespace

std::vector<std::string> validate(const VariationalProblem& problem) {
    std::vector<std::string> findings;
    if (!(problem.b > problem.a)) findings.emplace_back("interval order: need a < b");
    if (!(problem.alpha > 0.0 && problem.alpha < 1.0)) {
        findings.emplace_back("alpha out of range (0,1)");
    }
    const Lagrangian& L = problem.lagrangian;
    if (!L.eval || !L.d_x || !L.d_dax || !L.d_xdot) {
        findings.emplace_back("lagrangian is missing an evaluator");
        return findings;
    }
    if (problem.has_exact()) {
        if (!(std::abs(problem.exact(problem.a) - problem.xa) <= 1e-12)) {
            findings.emplace_back("exact solution does not match xa");
        }
        if (!(std::abs(problem.exact(problem.b) - problem.xb) <= 1e-12)) {
            findings.emplace_back("exact solution does not match xb");
        }
    }

    std::mt19937_64 rng(20120514);
    const double lo = std::min(problem.a, problem.b);
    const double hi = std::max(problem.a, problem.b);
    std::uniform_real_distribution<double> ut(lo, hi);
    std::uniform_real_distribution<double> uv(-2.0, 2.0);
    const char* names[4] = {"t", "d_x", "d_dax", "d_xdot"};
    const LagrangianFn* partials[4] = {nullptr, &L.d_x, &L.d_dax, &L.d_xdot};
    bool mismatch_reported[4] = {false, false, false, false};
    for (int s = 0; s < 20; ++s) {
        const double t = ut(rng), x = uv(rng), dax = uv(rng), xdot = uv(rng);
        for (int arg = 1; arg < 4; ++arg) {
            if (mismatch_reported[arg]) continue;
            const double fd = central_difference(L.eval, t, x, dax, xdot, arg);
            const double an = (*partials[arg])(t, x, dax, xdot);
            if (!(std::abs(an - fd) <= 1e-5 * std::max(1.0, std::abs(fd)))) {
                std::ostringstream msg;
                msg << "partial mismatch: " << names[arg] << " = " << an
                    << " but finite difference gives " << fd << " at (t=" << t << ", x=" << x
                    << ", dax=" << dax << ", xdot=" << xdot << ")";
                findings.push_back(msg.str());
                mismatch_reported[arg] = true;
            }
        }
        if (!L.uses_xdot && L.d_xdot(t, x, dax, xdot) != 0.0 && !mismatch_reported[0]) {
            findings.emplace_back("uses_xdot is false but d_xdot is nonzero");
            mismatch_reported[0] = true;
        }
    }
    return findings;
}

} // namespace fracvar
