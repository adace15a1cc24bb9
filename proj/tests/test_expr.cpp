#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dwpc/expr.hpp"
#include "dwpc/rng.hpp"

using namespace dwpc;
using Vec = std::vector<double>;

namespace {

const std::vector<std::string> kVars = {"x1", "x2", "y1"};

Expr P(const std::string& s) { return parse_expr(s, kVars); }

double central_fd(const Expr& e, int var, Vec p, double step) {
    Vec hi = p, lo = p;
    hi[static_cast<std::size_t>(var)] += step;
    lo[static_cast<std::size_t>(var)] -= step;
    return (e.evaluate(hi) - e.evaluate(lo)) / (2.0 * step);
}

// depth-limited random AST over three variables; pow exponents kept constant
// so the grammar's differentiation rules are all exercised without blowing up
Expr random_expr(Rng& rng, int depth) {
    if (depth == 0) {
        if (rng.uniform() < 0.5) return Expr::variable(static_cast<int>(rng.next() % 3));
        return Expr::constant(rng.uniform(0.5, 2.5));
    }
    switch (rng.next() % 12) {
        case 0: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 1: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        case 2: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        case 3: return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
        case 4: {
            static const double exps[] = {2.0, 3.0, 0.5, -1.0};
            return pow(random_expr(rng, depth - 1), Expr::constant(exps[rng.next() % 4]));
        }
        case 5: return -random_expr(rng, depth - 1);
        case 6: return sin(random_expr(rng, depth - 1));
        case 7: return cos(random_expr(rng, depth - 1));
        case 8: return exp(random_expr(rng, depth - 1) * Expr::constant(0.3));
        case 9: return sqrt(Expr::constant(1.0) + square(random_expr(rng, depth - 1)));
        case 10: return tanh(random_expr(rng, depth - 1));
        default: return sinh(random_expr(rng, depth - 1) * Expr::constant(0.2));
    }
}

Vec random_point(Rng& rng) {
    return {rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7)};
}

}  // namespace

TEST_CASE("parse: structure and precedence") {
    Expr e = P("2*x1 + sin(y1)");
    CHECK(e.op() == ExprOp::Add);
    CHECK(e.child(0).op() == ExprOp::Mul);
    CHECK(e.child(0).child(0).is_constant(2.0));
    CHECK(e.child(0).child(1).var_index() == 0);
    CHECK(e.child(1).op() == ExprOp::Sin);
    CHECK(e.child(1).child(0).var_index() == 2);

    // ^ is right-associative: x1^2^3 = x1^(2^3) = x1^8 (the 2^3 folds)
    Expr r = P("x1^2^3");
    CHECK(r.op() == ExprOp::Pow);
    CHECK(r.child(1).is_constant(8.0));
    CHECK(r.evaluate(Vec{2.0, 0.0, 0.0}) == doctest::Approx(256.0));

    // unary minus binds below ^
    CHECK(P("-x1^2").evaluate(Vec{3.0, 0.0, 0.0}) == doctest::Approx(-9.0));
    CHECK(P("2^-2").evaluate(Vec{0.0, 0.0, 0.0}) == doctest::Approx(0.25));
}

TEST_CASE("parse: errors carry byte offsets") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x1 + foo"), ParseError);
    CHECK_THROWS_AS(P("sin(x1"), ParseError);
    CHECK_THROWS_AS(P("(x1 + 2"), ParseError);
    CHECK_THROWS_AS(P("x1 + "), ParseError);
    CHECK_THROWS_AS(P("frob(x1)"), ParseError);
    try {
        P("x1 + zz1");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("evaluate: basics and known values") {
    CHECK(P("1").evaluate(Vec{0.0, 0.0, 0.0}) == 1.0);
    CHECK(P("sin(x1)").evaluate(Vec{0.0, 0.0, 0.0}) == 0.0);
    CHECK(P("x1^2 + y1").evaluate(Vec{3.0, 0.0, 4.0}) == doctest::Approx(13.0));
    // e^2 against an independently computed constant
    CHECK(P("exp(x1)*exp(x1)").evaluate(Vec{1.0, 0.0, 0.0}) ==
          doctest::Approx(7.3890560989306495).epsilon(1e-12));
}

TEST_CASE("evaluate: domain errors") {
    CHECK_THROWS_AS(P("1/x1").evaluate(Vec{0.0, 0.0, 0.0}), EvalError);
    CHECK_THROWS_AS(P("log(x1)").evaluate(Vec{0.0, 0.0, 0.0}), EvalError);
    CHECK_THROWS_AS(P("log(x1 - 2)").evaluate(Vec{1.0, 0.0, 0.0}), EvalError);
    CHECK_THROWS_AS(P("sqrt(x1 - 5)").evaluate(Vec{1.0, 0.0, 0.0}), EvalError);
    // dimension mismatch
    CHECK_THROWS_AS(P("y1").evaluate(Vec{1.0}), EvalError);
}

TEST_CASE("derivative: power rule, independence, chain rule") {
    Expr d = P("x1^2").derivative(0);
    CHECK(d.evaluate(Vec{5.0, 0.0, 0.0}) == doctest::Approx(10.0));

    CHECK(P("y1").derivative(0).is_zero());
    CHECK(P("3.5").derivative(1).is_zero());

    // d/dt exp(2t) at t=0.3: frozen value and a finite-difference check
    Expr e = parse_expr("exp(2*t)", std::vector<std::string>{"t"});
    Expr de = e.derivative(0);
    double val = de.evaluate(Vec{0.3});
    CHECK(val == doctest::Approx(3.6442376007810177).epsilon(1e-12));
    double fd = central_fd(e, 0, Vec{0.3}, 1e-5);
    CHECK(std::abs(val - fd) < 1e-7);
}

TEST_CASE("derivative: general power and quotient rules") {
    Expr e = P("x1^x2");
    double v = e.derivative(0).evaluate(Vec{1.5, 2.5, 0.0});
    CHECK(v == doctest::Approx(2.5 * std::pow(1.5, 1.5)).epsilon(1e-12));
    double w = e.derivative(1).evaluate(Vec{1.5, 2.5, 0.0});
    CHECK(w == doctest::Approx(std::pow(1.5, 2.5) * std::log(1.5)).epsilon(1e-12));

    Expr q = P("sin(x1)/x2");
    double fd = central_fd(q, 1, Vec{0.7, 1.3, 0.0}, 1e-6);
    CHECK(q.derivative(1).evaluate(Vec{0.7, 1.3, 0.0}) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("property: 200 random derivatives match central finite differences") {
    Rng rng(20240518);
    int kept = 0, attempts = 0;
    while (kept < 200 && attempts < 8000) {
        ++attempts;
        Expr e = random_expr(rng, 1 + static_cast<int>(rng.next() % 5));
        Vec p = random_point(rng);
        int var = static_cast<int>(rng.next() % 3);
        double step = 1e-5 * (1.0 + std::abs(p[static_cast<std::size_t>(var)]));
        double exact, fd1, fd2;
        try {
            exact = e.derivative(var).evaluate(p);
            fd1 = central_fd(e, var, p, step);
            fd2 = central_fd(e, var, p, step / 2.0);
        } catch (const EvalError&) {
            continue;
        }
        // discard numerically ill-conditioned draws (higher-order terms visible)
        if (std::abs(fd1 - fd2) > 0.25e-6 * (1.0 + std::abs(exact))) continue;
        ++kept;
        CHECK(std::abs(exact - fd2) <= 1e-6 * (1.0 + std::abs(exact)));
    }
    CHECK(kept == 200);
}

TEST_CASE("property: printing round-trips through the parser") {
    Rng rng(77);
    const std::vector<std::string> names = {"x1", "x2", "y1"};
    int done = 0;
    while (done < 50) {
        Expr e = random_expr(rng, 1 + static_cast<int>(rng.next() % 4));
        Expr back = parse_expr(e.str(names), names);
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            Vec p = random_point(rng);
            double a, b;
            try {
                a = e.evaluate(p);
                b = back.evaluate(p);
            } catch (const EvalError&) {
                ok = false;
                break;
            }
            CHECK(std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)));
        }
        if (ok) ++done;
    }
}

TEST_CASE("shifted remaps variable indices") {
    Expr e = P("x1 * sin(x2) + y1");
    Expr s = e.shifted(2);
    Vec p = {9.0, 9.0, 0.4, 0.8, 1.1};
    CHECK(s.evaluate(p) == doctest::Approx(e.evaluate(Vec{0.4, 0.8, 1.1})));
}
