#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dwpc/rng.hpp"
#include "dwpc/tensor.hpp"

using namespace dwpc;

namespace {

TensorValue random_tensor(Rng& rng, int n, std::vector<Variance> var) {
    TensorValue t(n, std::move(var));
    for (auto& v : t.data()) v = rng.uniform(-2.0, 2.0);
    return t;
}

Matrix random_spd(Rng& rng, int n) {
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = i == j ? 2.5 : 0.0;  // diagonally dominant, comfortably SPD
            for (int k = 0; k < n; ++k) s += a(i, k) * a(j, k) * 0.3;
            g(i, j) = s;
        }
    return g;
}

}  // namespace

TEST_CASE("contract: trace of identity and dot products") {
    TensorValue delta(3, {Variance::Up, Variance::Down});
    for (int i = 0; i < 3; ++i) delta({i, i}) = 1.0;
    TensorValue tr = contract(delta, 0, 1);
    CHECK(tr.rank() == 0);
    CHECK(tr.data()[0] == doctest::Approx(3.0));

    Rng rng(1);
    Vec u = {rng.uniform(), rng.uniform(), rng.uniform()};
    Vec v = {rng.uniform(), rng.uniform(), rng.uniform()};
    TensorValue outer(3, {Variance::Up, Variance::Down});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) outer({i, j}) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    CHECK(contract(outer, 0, 1).data()[0] == doctest::Approx(dot).epsilon(1e-13));
}

TEST_CASE("contract: random rank-3 against a naive triple loop") {
    Rng rng(2);
    TensorValue t = random_tensor(rng, 4, {Variance::Up, Variance::Down, Variance::Down});
    TensorValue c = contract(t, 0, 1);
    for (int k = 0; k < 4; ++k) {
        double want = 0.0;
        for (int m = 0; m < 4; ++m) want += t({m, m, k});
        CHECK(std::abs(c({k}) - want) <= 1e-13);
    }
}

TEST_CASE("contract: errors") {
    TensorValue t(3, {Variance::Down, Variance::Down});
    CHECK_THROWS_AS(contract(t, 0, 1), ShapeError);    // variance mismatch
    TensorValue u(3, {Variance::Up, Variance::Down});
    CHECK_THROWS_AS(contract(u, 0, 5), ShapeError);    // slot out of range
    CHECK_THROWS_AS(contract(u, 0, 0), ShapeError);
}

TEST_CASE("contract is linear") {
    Rng rng(3);
    auto var = std::vector<Variance>{Variance::Up, Variance::Down, Variance::Down};
    TensorValue a = random_tensor(rng, 3, var), b = random_tensor(rng, 3, var);
    double al = 1.7, be = -0.6;
    TensorValue mix(3, var);
    for (std::size_t i = 0; i < mix.size(); ++i)
        mix.data()[i] = al * a.data()[i] + be * b.data()[i];
    TensorValue ca = contract(a, 0, 1), cb = contract(b, 0, 1), cm = contract(mix, 0, 1);
    for (std::size_t i = 0; i < cm.size(); ++i)
        CHECK(std::abs(cm.data()[i] - (al * ca.data()[i] + be * cb.data()[i])) <= 1e-13);
}

TEST_CASE("raise_lower: identity metric, diagonal scaling, round trip") {
    TensorValue u(2, {Variance::Up});
    u({0}) = 1.0;
    u({1}) = 0.0;
    TensorValue same = raise_lower(u, 0, Matrix::identity(2), Variance::Down);
    CHECK(same({0}) == doctest::Approx(1.0));
    CHECK(same({1}) == doctest::Approx(0.0));

    Matrix g(2);
    g(0, 0) = 4.0;
    g(1, 1) = 9.0;
    TensorValue low = raise_lower(u, 0, g, Variance::Down);
    CHECK(low({0}) == doctest::Approx(4.0));
    CHECK(low({1}) == doctest::Approx(0.0));

    Rng rng(4);
    Matrix spd = random_spd(rng, 4);
    TensorValue w = random_tensor(rng, 4, {Variance::Up});
    TensorValue round = raise_lower(raise_lower(w, 0, spd, Variance::Down), 0, spd, Variance::Up);
    CHECK(max_abs_diff(round, w) <= 1e-12);
}

TEST_CASE("raise_lower: near-singular metric rejected") {
    Matrix g(2);
    g(0, 0) = 1.0;
    g(1, 1) = 1e-14;
    TensorValue u(2, {Variance::Up});
    u({0}) = 1.0;
    CHECK_THROWS_AS(raise_lower(u, 0, g, Variance::Down), SingularMatrixError);
}

TEST_CASE("max_abs_diff") {
    Rng rng(5);
    auto var = std::vector<Variance>{Variance::Down, Variance::Down};
    TensorValue a = random_tensor(rng, 3, var);
    CHECK(max_abs_diff(a, a) == 0.0);

    TensorValue z(3, var), one(3, var);
    one({1, 2}) = 1e-3;
    CHECK(max_abs_diff(z, one) == doctest::Approx(1e-3));

    TensorValue b = random_tensor(rng, 3, var);
    double want = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        want = std::max(want, std::abs(a.data()[i] - b.data()[i]));
    CHECK(max_abs_diff(a, b) == doctest::Approx(want));

    TensorValue other(2, var);
    CHECK_THROWS_AS(max_abs_diff(a, other), ShapeError);
}

TEST_CASE("symmetric eigenvalues and inverse") {
    Matrix g(2);
    g(0, 0) = 2.0;
    g(0, 1) = g(1, 0) = 1.0;
    g(1, 1) = 2.0;
    Vec ev = sym_eigenvalues(g);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-12));

    Matrix inv = invert(g);
    Matrix prod(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) prod(i, j) += g(i, k) * inv(k, j);
    CHECK(prod(0, 0) == doctest::Approx(1.0));
    CHECK(prod(1, 1) == doctest::Approx(1.0));
    CHECK(std::abs(prod(0, 1)) <= 1e-14);

    Matrix sing(2);
    sing(0, 0) = 1.0;
    sing(0, 1) = sing(1, 0) = 1.0;
    sing(1, 1) = 1.0;
    CHECK_THROWS_AS(invert(sing), SingularMatrixError);
}
