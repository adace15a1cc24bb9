#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dwpc/dwp.hpp"
#include "dwpc/geometry.hpp"
#include "dwpc/rng.hpp"

using namespace dwpc;

namespace {

ChartManifold sphere_chart() {
    std::vector<std::string> coords = {"theta", "phi"};
    std::vector<std::vector<Expr>> g = {
        {parse_expr("1", coords), parse_expr("0", coords)},
        {parse_expr("0", coords), parse_expr("sin(theta)^2", coords)},
    };
    Box box;
    box.ranges = {{0.4, 2.7}, {0.2, 6.0}};
    return ChartManifold::make(coords, g, box);
}

ChartManifold hyperbolic_chart() {
    std::vector<std::string> coords = {"t", "u"};
    std::vector<std::vector<Expr>> g = {
        {parse_expr("1", coords), parse_expr("0", coords)},
        {parse_expr("0", coords), parse_expr("exp(2*t)", coords)},
    };
    Box box;
    box.ranges = {{-1.0, 1.0}, {-1.0, 1.0}};
    return ChartManifold::make(coords, g, box);
}

std::vector<Vec> box_samples(const ManifoldGeometry& geom, std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<Vec> pts;
    for (int i = 0; i < count; ++i) {
        Vec p;
        for (const auto& r : geom.chart().box.ranges) {
            double w = r[1] - r[0];
            p.push_back(rng.uniform(r[0] + 0.05 * w, r[1] - 0.05 * w));
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace

TEST_CASE("metric_at: flat, sphere equator, hyperbolic strip") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y"}, Box{{{-1, 1}, {-1, 1}}}));
    Matrix g = flat.metric_at(Vec{0.3, -0.7});
    CHECK(g(0, 0) == 1.0);
    CHECK(g(1, 1) == 1.0);
    CHECK(g(0, 1) == 0.0);

    ManifoldGeometry sphere(sphere_chart());
    Matrix gs = sphere.metric_at(Vec{M_PI / 2.0, 1.0});
    CHECK(gs(0, 0) == doctest::Approx(1.0));
    CHECK(gs(1, 1) == doctest::Approx(1.0));

    ManifoldGeometry hyp(hyperbolic_chart());
    Matrix gh = hyp.metric_at(Vec{0.5, 0.0});
    CHECK(gh(1, 1) == doctest::Approx(2.718281828459045).epsilon(1e-14));
}

TEST_CASE("levi_civita: flat space vanishes, sphere symbol, exact symmetry") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y", "z"}, Box{{{-1, 1}, {-1, 1}, {-1, 1}}}));
    TensorValue G = flat.levi_civita().coeffs_at(Vec{0.1, 0.2, 0.3});
    for (double v : G.data()) CHECK(v == 0.0);

    ManifoldGeometry sphere(sphere_chart());
    TensorValue Gs = sphere.levi_civita().coeffs_at(Vec{1.0, 2.0});
    CHECK(Gs({0, 1, 1}) == doctest::Approx(-std::sin(1.0) * std::cos(1.0)).epsilon(1e-12));

    // symmetrized construction: both orders share the same expression
    for (const auto& p : box_samples(sphere, 7, 20)) {
        TensorValue c = sphere.levi_civita().coeffs_at(p);
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(c({k, i, j}) == c({k, j, i}));
    }
}

TEST_CASE("ssmc: zero field reduces to Levi-Civita, flat-space coefficients, torsion law") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y"}, Box{{{-1, 1}, {-1, 1}}}));
    VectorFieldSpec zero = VectorFieldSpec::zero(2);
    ConnectionField sm0 = flat.make_ssmc(zero);
    TensorValue t0 = sm0.torsion_at(Vec{0.2, 0.4});
    for (double v : t0.data()) CHECK(v == 0.0);

    // P = d/dx on flat R^2: Gamma~^1_11 = pi_1 - g_11 P^1 = 0, Gamma~^2_21 = pi_1 = 1
    VectorFieldSpec p1;
    p1.components = {Expr::constant(1.0), Expr::constant(0.0)};
    ConnectionField sm = flat.make_ssmc(p1);
    TensorValue g = sm.coeffs_at(Vec{0.0, 0.0});
    CHECK(g({0, 0, 0}) == doctest::Approx(0.0));
    CHECK(g({1, 1, 0}) == doctest::Approx(1.0));
    CHECK(g({0, 1, 1}) == doctest::Approx(-1.0));  // -g_11 P^0

    // torsion form T^k_ij = delta^k_i pi_j - delta^k_j pi_i on a curved chart
    ManifoldGeometry sphere(sphere_chart());
    VectorFieldSpec ps;
    ps.components = {parse_expr("cos(theta)", sphere.chart().coords),
                     parse_expr("0.5", sphere.chart().coords)};
    ConnectionField sms = sphere.make_ssmc(ps);
    for (const auto& p : box_samples(sphere, 11, 20)) {
        TensorValue tor = sms.torsion_at(p);
        Matrix gm = sphere.metric_at(p);
        Vec pv = {ps.components[0].evaluate(p), ps.components[1].evaluate(p)};
        Vec pi = mat_vec(gm, pv);
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double want = (k == i ? pi[static_cast<std::size_t>(j)] : 0.0) -
                                  (k == j ? pi[static_cast<std::size_t>(i)] : 0.0);
                    CHECK(std::abs(tor({k, i, j}) - want) <= 1e-10);
                }
    }
}

TEST_CASE("riemann: flat zero, sphere sectional curvature, antisymmetry") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y", "z"}, Box{{{-1, 1}, {-1, 1}, {-1, 1}}}));
    TensorValue R0 = flat.levi_civita().riemann_at(Vec{0.5, 0.1, -0.2});
    for (double v : R0.data()) CHECK(v == 0.0);

    ManifoldGeometry sphere(sphere_chart());
    TensorValue R = sphere.levi_civita().riemann_at(Vec{1.0, 2.0});
    // theta-component of R(d_theta, d_phi) d_phi over g_phiphi is the
    // sectional curvature, 1 on the unit sphere
    double gpp = std::sin(1.0) * std::sin(1.0);
    CHECK(R({0, 0, 1, 1}) / gpp == doctest::Approx(1.0).epsilon(1e-9));

    // constant-curvature identity R(X,Y)Z = g(Y,Z)X - g(X,Z)Y componentwise
    for (const auto& p : box_samples(sphere, 23, 10)) {
        TensorValue Rp = sphere.levi_civita().riemann_at(p);
        Matrix g = sphere.metric_at(p);
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        double want = (l == i ? g(j, k) : 0.0) - (l == j ? g(i, k) : 0.0);
                        CHECK(std::abs(Rp({l, i, j, k}) - want) <= 1e-9);
                        CHECK(std::abs(Rp({l, i, j, k}) + Rp({l, j, i, k})) <= 1e-12);
                    }
    }
}

TEST_CASE("ricci and scalar: flat, sphere, hyperbolic") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y"}, Box{{{-1, 1}, {-1, 1}}}));
    TensorValue Sf = flat.levi_civita().ricci_at(Vec{0.0, 0.0});
    for (double v : Sf.data()) CHECK(v == 0.0);

    ManifoldGeometry sphere(sphere_chart());
    for (const auto& p : box_samples(sphere, 31, 10)) {
        TensorValue S = sphere.levi_civita().ricci_at(p);
        Matrix g = sphere.metric_at(p);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(S({i, j}) - g(i, j)) <= 1e-9);
        CHECK(sphere.levi_civita().scalar_at(p, invert(g)) == doctest::Approx(2.0).epsilon(1e-9));
    }

    ManifoldGeometry hyp(hyperbolic_chart());
    for (const auto& p : box_samples(hyp, 37, 10)) {
        Matrix g = hyp.metric_at(p);
        CHECK(hyp.levi_civita().scalar_at(p, invert(g)) == doctest::Approx(-2.0).epsilon(1e-9));
    }
}

TEST_CASE("ricci contraction convention calibrated against the mixed-Ricci sign pattern") {
    // On the hyperbolic warped product the Ricci must equal -g. The frozen
    // convention S_jk = R^i_ijk achieves it; the alternative contraction
    // R^i_jik is its negative and cannot.
    ManifoldGeometry hyp(hyperbolic_chart());
    Vec p = {0.3, 0.1};
    TensorValue R = hyp.levi_civita().riemann_at(p);
    Matrix g = hyp.metric_at(p);
    double frozen = 0.0, alternative = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            double s1 = 0.0, s2 = 0.0;
            for (int i = 0; i < 2; ++i) {
                s1 += R({i, i, j, k});
                s2 += R({i, j, i, k});
            }
            frozen = std::max(frozen, std::abs(s1 - (-g(j, k))));
            alternative = std::max(alternative, std::abs(s2 - (-g(j, k))));
        }
    CHECK(frozen <= 1e-10);
    CHECK(alternative > 0.5);
}

TEST_CASE("grad_hess_laplace: constants, flat paraboloid, sphere eigenfunction") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y"}, Box{{{-1, 1}, {-1, 1}}}));
    GradHess c = flat.grad_hess_laplace(Expr::constant(3.0), Vec{0.4, 0.2});
    CHECK(c.grad[0] == 0.0);
    CHECK(c.laplace == 0.0);

    Expr phi = parse_expr("x^2 + y^2", std::vector<std::string>{"x", "y"});
    GradHess q = flat.grad_hess_laplace(phi, Vec{0.4, 0.2});
    CHECK(q.grad[0] == doctest::Approx(0.8));
    CHECK(q.grad[1] == doctest::Approx(0.4));
    CHECK(q.hess(0, 0) == doctest::Approx(2.0));
    CHECK(q.hess(0, 1) == doctest::Approx(0.0));
    CHECK(q.laplace == doctest::Approx(4.0));

    // cos(theta) is a Laplace eigenfunction on the sphere with eigenvalue 2
    ManifoldGeometry sphere(sphere_chart());
    Expr cphi = parse_expr("cos(theta)", sphere.chart().coords);
    GradHess s = sphere.grad_hess_laplace(cphi, Vec{0.7, 1.0});
    CHECK(s.laplace == doctest::Approx(-2.0 * std::cos(0.7)).epsilon(1e-9));

    // independent route: lap = (1/sqrt g) d_i (sqrt g g^ij d_j phi), with the
    // outer derivative taken by finite differences
    auto divergence_form = [&](const Vec& p) {
        const double step = 1e-6;
        double sum = 0.0;
        for (int i = 0; i < 2; ++i) {
            auto flux = [&](const Vec& q) {
                Matrix g = sphere.metric_at(q);
                Matrix gi = invert(g);
                double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
                double fi = 0.0;
                for (int j = 0; j < 2; ++j) fi += gi(i, j) * cphi.derivative(j).evaluate(q);
                return std::sqrt(det) * fi;
            };
            Vec hi = p, lo = p;
            hi[static_cast<std::size_t>(i)] += step;
            lo[static_cast<std::size_t>(i)] -= step;
            sum += (flux(hi) - flux(lo)) / (2.0 * step);
        }
        Matrix g = sphere.metric_at(p);
        double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
        return sum / std::sqrt(det);
    };
    CHECK(s.laplace == doctest::Approx(divergence_form(Vec{0.7, 1.0})).epsilon(1e-5));
}

TEST_CASE("covariant derivative of the Ricci tensor") {
    ManifoldGeometry flat(ChartManifold::euclidean({"x", "y"}, Box{{{-1, 1}, {-1, 1}}}));
    TensorValue N0 = flat.levi_civita().nabla_ricci_at(Vec{0.1, 0.9});
    for (double v : N0.data()) CHECK(v == 0.0);

    // on the round sphere S = g, so nabla S = 0 and every cyclic sum vanishes
    ManifoldGeometry sphere(sphere_chart());
    for (const auto& p : box_samples(sphere, 41, 10)) {
        TensorValue N = sphere.levi_civita().nabla_ricci_at(p);
        for (double v : N.data()) CHECK(std::abs(v) <= 1e-8);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(std::abs(N({i, j, k}) + N({j, k, i}) + N({k, i, j})) <= 1e-8);
    }
}

TEST_CASE("metric compatibility for both connections on a curved chart") {
    ManifoldGeometry sphere(sphere_chart());
    VectorFieldSpec ps;
    ps.components = {parse_expr("cos(theta)", sphere.chart().coords),
                     parse_expr("0.3", sphere.chart().coords)};
    ConnectionField sm = sphere.make_ssmc(ps);
    const ConnectionField& lc = sphere.levi_civita();

    std::vector<Expr> dg(8);
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dg[static_cast<std::size_t>((l * 2 + i) * 2 + j)] = sphere.chart().g(i, j).derivative(l);

    for (const auto& p : box_samples(sphere, 43, 25)) {
        Matrix g = sphere.metric_at(p);
        for (const ConnectionField* conn : std::initializer_list<const ConnectionField*>{&lc, &sm}) {
            TensorValue G = conn->coeffs_at(p);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        double v = dg[static_cast<std::size_t>((i * 2 + j) * 2 + k)].evaluate(p);
                        for (int m = 0; m < 2; ++m) v -= G({m, i, j}) * g(m, k) + G({m, i, k}) * g(j, m);
                        CHECK(std::abs(v) <= 1e-9);
                    }
        }
    }
}

TEST_CASE("semi-symmetric curvature matches the Levi-Civita relation on a plain chart") {
    // validates the oracle against the standard curvature relation with a
    // nonzero field on a manifold that is not any warped product
    ManifoldGeometry sphere(sphere_chart());
    VectorFieldSpec ps;
    ps.components = {parse_expr("cos(theta)", sphere.chart().coords),
                     parse_expr("0.25", sphere.chart().coords)};
    ConnectionField sm = sphere.make_ssmc(ps);
    const ConnectionField& lc = sphere.levi_civita();

    std::vector<Expr> dp(4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) dp[static_cast<std::size_t>(i * 2 + k)] = ps.components[static_cast<std::size_t>(k)].derivative(i);

    for (const auto& p : box_samples(sphere, 47, 25)) {
        Matrix g = sphere.metric_at(p);
        TensorValue G = lc.coeffs_at(p);
        Vec pv = {ps.components[0].evaluate(p), ps.components[1].evaluate(p)};
        Matrix np(2);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) {
                double v = dp[static_cast<std::size_t>(i * 2 + k)].evaluate(p);
                for (int m = 0; m < 2; ++m) v += G({k, i, m}) * pv[static_cast<std::size_t>(m)];
                np(i, k) = v;
            }
        TensorValue want = ssmc_curvature_from_relation(lc.riemann_at(p), g, np, pv);
        CHECK(max_abs_diff(sm.riemann_at(p), want) <= 1e-7);
    }
}

TEST_CASE("validate rejects non-positive-definite metrics") {
    std::vector<std::string> coords = {"x", "y"};
    std::vector<std::vector<Expr>> g = {
        {parse_expr("x", coords), parse_expr("0", coords)},
        {parse_expr("0", coords), parse_expr("1", coords)},
    };
    Box box;
    box.ranges = {{-1.0, 1.0}, {-1.0, 1.0}};
    ManifoldGeometry geom(ChartManifold::make(coords, g, box));
    CHECK_THROWS_AS(geom.validate_at({Vec{-0.5, 0.0}}), ConfigError);
}
