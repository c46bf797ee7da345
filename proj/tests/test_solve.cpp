#include <cmath>
#include <random>

#include "doctest.h"

#include "fracvar/errors.hpp"
#include "fracvar/model.hpp"
#include "fracvar/solve.hpp"
#include "fracvar/special.hpp"

using namespace fracvar;

namespace {

VariationalProblem dax_only_problem() {
    VariationalProblem p = example1();
    p.name = "dax";
    p.lagrangian.eval = [](double, double, double dax, double) { return dax; };
    p.lagrangian.d_dax = [](double, double, double, double) { return 1.0; };
    p.exact = {};
    return p;
}

// Entry (r, c), 1-based, of the closed-form example1 matrix with
// A_i = (−1)^i h^{1.5} C(0.5, i): Σ_{i=max(0,c−r)}^{n−r} A_i A_{i+r−c}.
Eigen::MatrixXd example1_closed_form(int n) {
    const double h = 1.0 / n;
    Eigen::VectorXd A(n + 1);
    for (int i = 0; i <= n; ++i) A[i] = (i % 2 ? -1.0 : 1.0) * std::pow(h, 1.5) * binom_real(0.5, i);
    Eigen::MatrixXd M(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
        for (int c = 1; c < n; ++c) {
            double s = 0.0;
            for (int i = std::max(0, c - r); i <= n - r; ++i) s += A[i] * A[i + r - c];
            M(r - 1, c - 1) = s;
        }
    }
    return M;
}

} // namespace

TEST_CASE("affine detection") {
    CHECK(detect_affine(discretize(example1(), 10)));
    CHECK(detect_affine(discretize(example2(), 10)));
    CHECK_FALSE(detect_affine(discretize(example3(), 10)));
}

TEST_CASE("example2 assembles to the tridiagonal [2, -1] pattern") {
    for (int n : {4, 5, 9, 30}) {
        const auto dp = discretize(example2(), n);
        const auto sys = assemble_linear(dp);
        // the probed system is −(2/h) times the textbook one
        const Eigen::MatrixXd scaled = sys.A * (-dp.mesh.h() / 2.0);
        for (int i = 0; i < n - 1; ++i) {
            for (int j = 0; j < n - 1; ++j) {
                if (i == j) CHECK(scaled(i, j) == doctest::Approx(2.0).epsilon(1e-12));
                else if (std::abs(i - j) == 1) CHECK(scaled(i, j) == doctest::Approx(-1.0).epsilon(1e-12));
                else CHECK(sys.A(i, j) == 0.0);
            }
        }
        CHECK(is_tridiagonal(sys.A));
        // and the right-hand side (h/2)·h^{0.5}·S_{n−i}, plus x_n in the last row
        const Eigen::VectorXd S = dp.weights.partial_sums();
        const Eigen::VectorXd rhs = sys.b * (-dp.mesh.h() / 2.0);
        for (int i = 1; i < n; ++i) {
            double expect = dp.mesh.h() / 2.0 * std::pow(dp.mesh.h(), 0.5) * S[n - i];
            if (i == n - 1) expect += 1.0;
            CHECK(rhs[i - 1] == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("example1 assembles to the closed-form matrix at n = 4") {
    const auto dp = discretize(example1(), 4);
    const auto sys = assemble_linear(dp);
    const double h = dp.mesh.h();
    const Eigen::MatrixXd scaled = sys.A * (h * h * h / 2.0);
    // scripted in exact arithmetic from the closed-form double sums
    Eigen::Matrix3d frozen;
    frozen << 0.01983642578125, -0.0067138671875, -0.00146484375,
              -0.0067138671875, 0.019775390625, -0.0068359375,
              -0.00146484375, -0.0068359375, 0.01953125;
    CHECK((scaled - frozen).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK((scaled - example1_closed_form(4)).lpNorm<Eigen::Infinity>() <= 1e-12);

    const Eigen::Vector3d frozen_b(-0.0013209418045733780, 0.00082232292278441318, 0.0095699394198606625);
    CHECK((sys.b * (h * h * h / 2.0) - frozen_b).lpNorm<Eigen::Infinity>() <= 1e-12);

    for (int n : {6, 11}) {
        const auto d = discretize(example1(), n);
        const double hn = d.mesh.h();
        CHECK((assemble_linear(d).A * (hn * hn * hn / 2.0) - example1_closed_form(n))
                  .lpNorm<Eigen::Infinity>() <= 1e-12);
    }
}

TEST_CASE("assemble_linear refuses non-affine residuals") {
    CHECK_THROWS_AS(assemble_linear(discretize(example3(), 6)), DispatchError);
}

TEST_CASE("linear Lagrangian gives a zero matrix and a singular system") {
    const auto dp = discretize(dax_only_problem(), 8);
    const auto sys = assemble_linear(dp);
    CHECK(sys.A.isZero(0.0));
    CHECK(sys.b.cwiseAbs().minCoeff() > 0.0);
    CHECK_THROWS_AS(solve_linear(sys.A, sys.b), SingularMatrixError);
    CHECK_THROWS_AS(solve(dp), SingularMatrixError);
}

TEST_CASE("solve_linear basics") {
    const Eigen::Vector3d b(1, 2, 3);
    CHECK(solve_linear(Eigen::Matrix3d::Identity(), b).isApprox(Eigen::Vector3d(1, 2, 3)));

    const int m = 12;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        T(i, i) = 2.0;
        if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = -1.0;
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
    const Eigen::VectorXd x = solve_linear(T, T * ones);
    CHECK((x - ones).lpNorm<Eigen::Infinity>() <= 1e-12);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd D(9, 9);
    for (auto& v : D.reshaped()) v = u(rng);
    Eigen::VectorXd rhs(9);
    for (auto& v : rhs) v = u(rng);
    const Eigen::VectorXd y = solve_linear(D, rhs);
    CHECK((D * y - rhs).lpNorm<Eigen::Infinity>() <= 1e-10 * (1.0 + rhs.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("singularity is reported with the pivot index") {
    Eigen::Matrix3d S;
    S << 1, 2, 3, 2, 4, 6, 1, 0, 1;
    try {
        solve_linear(S, Eigen::Vector3d(1, 1, 1));
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot() == 2);
        CHECK(std::string(e.what()).find("pivot 2") != std::string::npos);
    }
    // a tridiagonal matrix that needs pivoting goes through LU instead
    Eigen::Matrix3d P;
    P << 0, 1, 0, 1, 0, 1, 0, 1, 1;
    const Eigen::Vector3d r(1, 2, 3);
    CHECK((P * solve_linear(P, r) - r).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("thomas algorithm") {
    const Eigen::VectorXd sub = (Eigen::VectorXd(4) << 0, 1, 1, 1).finished();
    const Eigen::VectorXd diag = (Eigen::VectorXd(4) << 4, 4, 4, 4).finished();
    const Eigen::VectorXd sup = (Eigen::VectorXd(4) << 1, 1, 1, 0).finished();
    const Eigen::VectorXd x_true = (Eigen::VectorXd(4) << 1, -2, 3, 0.5).finished();
    Eigen::VectorXd rhs(4);
    for (int i = 0; i < 4; ++i) {
        rhs[i] = diag[i] * x_true[i] + (i > 0 ? sub[i] * x_true[i - 1] : 0.0) +
                 (i < 3 ? sup[i] * x_true[i + 1] : 0.0);
    }
    CHECK((solve_tridiagonal(sub, diag, sup, rhs) - x_true).lpNorm<Eigen::Infinity>() <= 1e-14);
    CHECK_THROWS_AS(solve_tridiagonal(sub, Eigen::VectorXd::Zero(4), sup, rhs), SingularMatrixError);
}

TEST_CASE("linear and newton paths agree on affine problems") {
    for (const auto& p : {example1(), example2()}) {
        for (int n : {5, 12, 30}) {
            SolveOptions lin, newt;
            lin.force_path = PathChoice::linear;
            newt.force_path = PathChoice::newton;
            const auto a = solve(p, n, lin);
            const auto b = solve(p, n, newt);
            CHECK(a.path == SolvePath::linear);
            CHECK(b.path == SolvePath::newton);
            CHECK(b.iterations <= 2);
            CHECK((a.trajectory.values - b.trajectory.values).lpNorm<Eigen::Infinity>() <= 1e-8);
        }
    }
}

TEST_CASE("reference errors (n counts mesh nodes, so n - 1 intervals)") {
    // solve_linear on example2 with 5 nodes
    {
        const auto dp = discretize(example2(), 4);
        const auto sys = assemble_linear(dp);
        const Eigen::VectorXd x = solve_linear(sys.A, sys.b);
        const Trajectory tr{dp.mesh, dp.full(x)};
        CHECK(max_norm_error(dp.problem, tr) == doctest::Approx(0.0070).epsilon(0.01));
    }
    CHECK(*solve(example1(), 29).error_vs_exact == doctest::Approx(0.0065).epsilon(0.01));
    CHECK(*solve(example2(), 29).error_vs_exact == doctest::Approx(0.0012).epsilon(0.03));
    CHECK(*solve_newton(discretize(example3(), 4)).error_vs_exact == doctest::Approx(1.4787).epsilon(0.001));
    CHECK(*solve_newton(discretize(example3(), 19)).error_vs_exact == doctest::Approx(0.3006).epsilon(0.001));
}

TEST_CASE("solve reports") {
    const auto r = solve(example1(), 30);
    CHECK(r.path == SolvePath::linear);
    CHECK(r.residual_inf_norm <= 1e-10);
    CHECK(r.trajectory.values.size() == 31);
    CHECK(r.trajectory.values[0] == 0.0);
    CHECK(r.trajectory.values[30] == 1.0);
    REQUIRE(r.error_vs_exact);
    CHECK(*r.error_vs_exact == doctest::Approx(0.0065).epsilon(0.1));
    CHECK(r.wall_seconds >= 0.0);

    const auto r3 = solve(example3(), 10);
    CHECK(r3.path == SolvePath::newton);
    CHECK(r3.residual_inf_norm <= 1e-10);
    CHECK(r3.trajectory.values[10] == 1.0);

    auto no_exact = example1();
    no_exact.exact = {};
    CHECK_FALSE(solve(no_exact, 6).error_vs_exact.has_value());

    CHECK_THROWS_AS(solve(example1(), 2), DomainError);
}

TEST_CASE("error metric vanishes on exact samples") {
    for (const auto& p : {example1(), example2(), example3()}) {
        const Mesh m(0.0, 1.0, 17);
        Eigen::VectorXd x(18);
        for (int i = 0; i <= 17; ++i) x[i] = p.exact(m.t(i));
        CHECK(max_norm_error(p, Trajectory{m, x}) == 0.0);
    }
}

TEST_CASE("accuracy improves with n") {
    auto E = [](const VariationalProblem& p, int n) { return *solve(p, n).error_vs_exact; };
    for (const auto& p : {example1(), example2()}) {
        CHECK(E(p, 30) < E(p, 10));
        CHECK(E(p, 10) < E(p, 5));
    }
    CHECK(E(example3(), 90) < E(example3(), 20));
    CHECK(E(example3(), 20) < E(example3(), 5));
}

TEST_CASE("newton residual decreases strictly") {
    // Run one iteration at a time and watch the residual.
    const auto dp = discretize(example3(), 15);
    double prev = stationarity_residual(dp, linear_interp_trajectory(dp.problem, dp.mesh)
                                               .values.segment(1, 14))
                      .lpNorm<Eigen::Infinity>();
    int converged_at = -1;
    for (int k = 1; k <= 60 && converged_at < 0; ++k) {
        SolveOptions o;
        o.max_newton_iters = k;
        try {
            const auto r = solve_newton(dp, o);
            converged_at = r.iterations;
            CHECK(r.residual_inf_norm < prev);
        } catch (const NonConvergenceError& e) {
            CHECK(e.residual() < prev);
            CHECK(e.iterations() == k);
            prev = e.residual();
        }
    }
    CHECK(converged_at > 0);
}

TEST_CASE("newton non-convergence carries the best iterate") {
    SolveOptions o;
    o.max_newton_iters = 1;
    try {
        solve_newton(discretize(example3(), 12), o);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.best_iterate().size() == 11);
        CHECK(e.residual() > o.tol_residual);
    }
    CHECK_THROWS_AS(solve_newton(discretize(example3(), 2)), DomainError);
}

TEST_CASE("forcing the linear path on a nonlinear problem is a dispatch error") {
    SolveOptions o;
    o.force_path = PathChoice::linear;
    CHECK_THROWS_AS(solve(example3(), 8, o), DispatchError);
}
