#include <cmath>
#include <random>
#include <string>

#include "doctest.h"

#include "fracvar/expr.hpp"
#include "fracvar/model.hpp"

using namespace fracvar;
using expr::EvalContext;
using expr::ParseError;

namespace {

double ev(const std::string& s, EvalContext ctx = {}) { return expr::parse(s).eval(ctx); }

std::size_t error_offset(const std::string& s) {
    try {
        expr::parse(s);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for '" << s << "'");
    return 0;
}

// Random expression source over the full grammar, for round-trip checks.
std::string random_source(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 2);
    std::uniform_real_distribution<double> num(0.0, 3.0);
    const char* vars[] = {"t", "x", "dax", "dx", "pi"};
    switch (pick(rng)) {
    case 0: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", num(rng));
        return buf;
    }
    case 1:
    case 2: return vars[std::uniform_int_distribution<int>(0, 4)(rng)];
    case 3: return "-" + random_source(rng, depth - 1);
    case 4: return random_source(rng, depth - 1) + " + " + random_source(rng, depth - 1);
    case 5: return random_source(rng, depth - 1) + "-" + random_source(rng, depth - 1);
    case 6: return random_source(rng, depth - 1) + "*" + random_source(rng, depth - 1);
    case 7: return "(" + random_source(rng, depth - 1) + ")/(2+abs(" + random_source(rng, depth - 1) + "))";
    case 8: return "abs(" + random_source(rng, depth - 1) + ")^1.5";
    default: return "sin(" + random_source(rng, depth - 1) + ")*exp(cos(" + random_source(rng, depth - 1) + "))";
    }
}

} // namespace

TEST_CASE("precedence and associativity") {
    CHECK(ev("2+3*4") == 14.0);
    CHECK(ev("-2^2") == -4.0);
    CHECK(ev("2^3^2") == 512.0);
    CHECK(ev("2^-1") == 0.5);
    CHECK(ev("8/4/2") == 1.0);
    CHECK(ev("10-4-3") == 3.0);
    CHECK(ev("(1+2)*3") == 9.0);
    CHECK(ev("--3") == 3.0);
    CHECK(ev(" 1.5e2 + .5 ") == 150.5);
    CHECK(ev("pi") == doctest::Approx(M_PI));
    CHECK(ev("pow(2, 10)") == 1024.0);
}

TEST_CASE("variables and functions") {
    EvalContext ctx{0.3, -1.0, 2.0, 4.0};
    CHECK(ev("t", ctx) == 0.3);
    CHECK(ev("x*dax + dx", ctx) == 2.0);
    CHECK(ev("gamma(2.5)") == doctest::Approx(1.3293403881791370).epsilon(1e-14));
    CHECK(ev("sqrt(4)+exp(0)+log(1)+sin(0)+cos(0)+abs(-2)") == 6.0);

    const auto e = expr::parse("(dax - 2/gamma(2.5)*t^1.5)^2");
    CHECK(e.uses(expr::Var::dax));
    CHECK(e.uses(expr::Var::t));
    CHECK_FALSE(e.uses(expr::Var::x));
    CHECK_FALSE(e.uses(expr::Var::dx));
    CHECK(e.eval({1.0, 0.0, 2.0 / std::tgamma(2.5), 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("parse errors carry offsets") {
    CHECK(error_offset("2*y") == 2);
    CHECK(error_offset("foo(1)") == 0);
    CHECK(error_offset("pow(1)") == 0);
    CHECK(error_offset("sqrt(1, 2)") == 0);
    CHECK(error_offset("(1+2") == 4);
    CHECK(error_offset("1+2)") == 3);
    CHECK(error_offset("2t") == 1);
    CHECK(error_offset("") == 0);
    CHECK(error_offset("1 +") == 3);
    CHECK(error_offset("3 $ 4") == 2);
    CHECK(error_offset("1e") == 1);
    CHECK(error_offset("1e999") == 0);
    try {
        expr::parse("2*y");
    } catch (const ParseError& e) {
        CHECK(e.message().find("unknown identifier 'y'") != std::string::npos);
    }
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(ev("1/0"), expr::EvalError);
    CHECK_THROWS_AS(ev("log(0)"), expr::EvalError);
    CHECK_THROWS_AS(ev("log(-1)"), expr::EvalError);
    CHECK_THROWS_AS(ev("sqrt(-1)"), expr::EvalError);
    CHECK_THROWS_AS(ev("gamma(-2)"), expr::EvalError);
    CHECK_THROWS_AS(ev("(-8)^(1/3)"), expr::EvalError);
    CHECK(ev("(-2)^3") == -8.0);
    try {
        ev("1 + log(t)");
    } catch (const expr::EvalError& e) {
        CHECK(std::string(e.what()).find("log(t)") != std::string::npos);
    }
}

TEST_CASE("pretty-print round trip") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string src = random_source(rng, 4);
        CAPTURE(src);
        const auto a = expr::parse(src);
        const auto b = expr::parse(a.to_string());
        CHECK(b.to_string() == a.to_string());
        for (int k = 0; k < 100; ++k) {
            const EvalContext ctx{u(rng), u(rng), u(rng), u(rng)};
            const double va = a.eval(ctx), vb = b.eval(ctx);
            CHECK(std::abs(va - vb) <= 1e-15 * std::max(1.0, std::abs(va)));
        }
    }
}

TEST_CASE("parser totality on hostile input") {
    CHECK_THROWS_AS(expr::parse(std::string(10000, '(') + "1" + std::string(10000, ')')), ParseError);
    CHECK_THROWS_AS(expr::parse(std::string(10000, '-') + "1"), ParseError);
    std::string tower = "2";
    for (int i = 0; i < 3000; ++i) tower += "^2";
    CHECK_THROWS_AS(expr::parse(tower), ParseError);
    std::string chain = "1";
    for (int i = 0; i < 4000; ++i) chain += "+1";
    CHECK(ev(chain) == 4001.0);
    CHECK(ev(std::string(50, '(') + "1" + std::string(50, ')')) == 1.0);

    // random byte soup: either parses or throws a positioned ParseError
    std::mt19937_64 rng(7);
    const std::string alphabet = "0123456789.e+-*/^(),tdaxpisqrgmexplo \t";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 10000);
    for (int trial = 0; trial < 300; ++trial) {
        std::string s(trial < 250 ? trial : len(rng), ' ');
        for (auto& c : s) c = alphabet[pick(rng)];
        try {
            expr::parse(s);
        } catch (const ParseError& e) {
            CHECK(e.offset() <= s.size());
        }
    }
}

TEST_CASE("to_lagrangian matches example1") {
    const auto L = expr::to_lagrangian("(dax - 2/gamma(2.5)*t^1.5)^2");
    const auto ref = example1().lagrangian;
    CHECK_FALSE(L.uses_xdot);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ut(0.0, 1.0), uv(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        const double t = ut(rng), x = uv(rng), dax = uv(rng), xd = uv(rng);
        CHECK(std::abs(L.eval(t, x, dax, xd) - ref.eval(t, x, dax, xd)) <= 1e-12);
        const double d = ref.d_dax(t, x, dax, xd);
        CHECK(std::abs(L.d_dax(t, x, dax, xd) - d) <= 1e-5 * std::max(1.0, std::abs(d)));
        CHECK(std::abs(L.d_x(t, x, dax, xd)) <= 1e-9);
        CHECK(L.d_xdot(t, x, dax, xd) == 0.0);
    }
}

TEST_CASE("to_lagrangian matches example2") {
    const auto L = expr::to_lagrangian("dax - dx^2");
    const auto ref = example2().lagrangian;
    CHECK(L.uses_xdot);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ut(0.0, 1.0), uv(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        const double t = ut(rng), x = uv(rng), dax = uv(rng), xd = uv(rng);
        CHECK(std::abs(L.eval(t, x, dax, xd) - ref.eval(t, x, dax, xd)) <= 1e-12);
        for (auto [a, b] : {std::pair{L.d_dax(t, x, dax, xd), ref.d_dax(t, x, dax, xd)},
                            std::pair{L.d_xdot(t, x, dax, xd), ref.d_xdot(t, x, dax, xd)}}) {
            CHECK(std::abs(a - b) <= 1e-5 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("to_lagrangian matches example3 partials") {
    const auto L = expr::to_lagrangian(
        "(dax - 16*gamma(6)/gamma(5.5)*t^4.5 + 20*gamma(4)/gamma(3.5)*t^2.5 - 5/gamma(1.5)*t^0.5)^4");
    const auto ref = example3().lagrangian;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ut(0.0, 1.0), uv(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        const double t = ut(rng), x = uv(rng), dax = uv(rng);
        const double d = ref.d_dax(t, x, dax, 0.0);
        CHECK(std::abs(L.d_dax(t, x, dax, 0.0) - d) <= 1e-5 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("constant Lagrangian and functions of t") {
    const auto L = expr::to_lagrangian("1");
    CHECK(L.eval(0.1, 2.0, 3.0, 4.0) == 1.0);
    CHECK(L.d_x(0.1, 2.0, 3.0, 4.0) == 0.0);
    CHECK(L.d_dax(0.1, 2.0, 3.0, 4.0) == 0.0);
    CHECK(L.d_xdot(0.1, 2.0, 3.0, 4.0) == 0.0);

    const auto f = expr::to_function_of_t("t^2 + 1");
    CHECK(f(3.0) == 10.0);
    CHECK_THROWS_AS(expr::to_function_of_t("t + x"), ParseError);
    CHECK_THROWS_AS(expr::to_lagrangian("dax +"), ParseError);
}
