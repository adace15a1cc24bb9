#include "dwpc/geometry.hpp"

#include <cmath>

namespace dwpc {

Vec Box::center() const {
    Vec c;
    c.reserve(ranges.size());
    for (const auto& r : ranges) c.push_back(0.5 * (r[0] + r[1]));
    return c;
}

bool Box::contains(std::span<const double> p) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (std::size_t i = 0; i < ranges.size(); ++i)
        if (p[i] < ranges[i][0] || p[i] > ranges[i][1]) return false;
    return true;
}

ChartManifold ChartManifold::make(std::vector<std::string> coords,
                                  std::vector<std::vector<Expr>> g, Box box) {
    const int n = static_cast<int>(coords.size());
    if (static_cast<int>(g.size()) != n) throw ConfigError("metric row count != dimension");
    if (box.dim() != n) throw ConfigError("domain box dimension != chart dimension");
    ChartManifold m;
    m.coords = std::move(coords);
    m.box = std::move(box);
    m.metric.assign(static_cast<std::size_t>(n) * n, Expr::constant(0.0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g[static_cast<std::size_t>(i)].size()) != n)
            throw ConfigError("metric row length != dimension");
        for (int j = 0; j <= i; ++j) {
            // store the lower-triangle expression in both slots: exact symmetry
            m.g(i, j) = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            m.g(j, i) = m.g(i, j);
        }
    }
    return m;
}

ChartManifold ChartManifold::euclidean(std::vector<std::string> coords, Box box) {
    const int n = static_cast<int>(coords.size());
    std::vector<std::vector<Expr>> g(static_cast<std::size_t>(n),
                                     std::vector<Expr>(static_cast<std::size_t>(n), Expr::constant(0.0)));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Expr::constant(1.0);
    return make(std::move(coords), std::move(g), std::move(box));
}

VectorFieldSpec VectorFieldSpec::zero(int n) {
    VectorFieldSpec v;
    v.components.assign(static_cast<std::size_t>(n), Expr::constant(0.0));
    return v;
}

bool VectorFieldSpec::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// symbolic matrix inverse
// ---------------------------------------------------------------------------

namespace {

Expr det_minor(const std::vector<Expr>& m, int n, std::vector<int>& rows,
               std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k == 1) return m[static_cast<std::size_t>(rows[0]) * n + cols[0]];
    Expr sum = Expr::constant(0.0);
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (int c = 0; c < k; ++c) {
        const Expr& entry = m[static_cast<std::size_t>(r0) * n + cols[static_cast<std::size_t>(c)]];
        if (entry.is_zero()) continue;  // structural zero, drop the whole term
        std::vector<int> sub_cols;
        sub_cols.reserve(static_cast<std::size_t>(k) - 1);
        for (int c2 = 0; c2 < k; ++c2)
            if (c2 != c) sub_cols.push_back(cols[static_cast<std::size_t>(c2)]);
        Expr term = entry * det_minor(m, n, sub_rows, sub_cols);
        sum = (c % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

}  // namespace

Expr symbolic_det(const std::vector<Expr>& m, int n) {
    std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)] = i;
    return det_minor(m, n, rows, cols);
}

std::vector<Expr> symbolic_inverse(const std::vector<Expr>& m, int n) {
    Expr det = symbolic_det(m, n);
    std::vector<Expr> inv(static_cast<std::size_t>(n) * n, Expr::constant(0.0));
    if (n == 1) {
        inv[0] = Expr::constant(1.0) / m[0];
        return inv;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // cofactor C_ji / det  (adjugate transpose)
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            Expr minor = det_minor(m, n, rows, cols);
            Expr cof = ((i + j) % 2 == 0) ? minor : Expr::make(ExprOp::Neg, minor);
            inv[static_cast<std::size_t>(i) * n + j] = cof / det;
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// ConnectionField
// ---------------------------------------------------------------------------

ConnectionField::ConnectionField(int n, ConnectionKind kind, std::vector<Expr> gamma)
    : n_(n), kind_(kind), gamma_(std::move(gamma)) {
    if (gamma_.size() != static_cast<std::size_t>(n_) * n_ * n_)
        throw ShapeError("connection coefficient count != n^3");
}

const Expr& ConnectionField::gamma(int k, int i, int j) const {
    return gamma_[(static_cast<std::size_t>(k) * n_ + i) * n_ + j];
}

TensorValue ConnectionField::coeffs_at(std::span<const double> p) const {
    TensorValue t(n_, {Variance::Up, Variance::Down, Variance::Down});
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t({k, i, j}) = gamma(k, i, j).evaluate(p);
    return t;
}

TensorValue ConnectionField::torsion_at(std::span<const double> p) const {
    TensorValue g = coeffs_at(p);
    TensorValue t(n_, {Variance::Up, Variance::Down, Variance::Down});
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t({k, i, j}) = g({k, i, j}) - g({k, j, i});
    return t;
}

const std::vector<Expr>& ConnectionField::riemann() const {
    if (!riemann_.empty()) return riemann_;
    const int n = n_;
    std::vector<Expr> dgamma(static_cast<std::size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    dgamma[((static_cast<std::size_t>(i) * n + l) * n + j) * n + k] =
                        gamma(l, j, k).derivative(i);

    auto dG = [&](int i, int l, int j, int k) -> const Expr& {
        return dgamma[((static_cast<std::size_t>(i) * n + l) * n + j) * n + k];
    };

    riemann_.assign(static_cast<std::size_t>(n) * n * n * n, Expr::constant(0.0));
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Expr sum = dG(i, l, j, k) - dG(j, l, i, k);
                    for (int m = 0; m < n; ++m)
                        sum = sum + gamma(l, i, m) * gamma(m, j, k) -
                              gamma(l, j, m) * gamma(m, i, k);
                    riemann_[((static_cast<std::size_t>(l) * n + i) * n + j) * n + k] = sum;
                }
    return riemann_;
}

const std::vector<Expr>& ConnectionField::ricci() const {
    if (!ricci_.empty()) return ricci_;
    const auto& R = riemann();
    const int n = n_;
    ricci_.assign(static_cast<std::size_t>(n) * n, Expr::constant(0.0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Expr sum = Expr::constant(0.0);
            for (int i = 0; i < n; ++i)
                sum = sum + R[((static_cast<std::size_t>(i) * n + i) * n + j) * n + k];
            ricci_[static_cast<std::size_t>(j) * n + k] = sum;
        }
    return ricci_;
}

const std::vector<Expr>& ConnectionField::nabla_ricci() const {
    if (!nabla_ricci_.empty()) return nabla_ricci_;
    const auto& S = ricci();
    const int n = n_;
    nabla_ricci_.assign(static_cast<std::size_t>(n) * n * n, Expr::constant(0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Expr sum = S[static_cast<std::size_t>(j) * n + k].derivative(i);
                for (int m = 0; m < n; ++m)
                    sum = sum - gamma(m, i, j) * S[static_cast<std::size_t>(m) * n + k] -
                          gamma(m, i, k) * S[static_cast<std::size_t>(j) * n + m];
                nabla_ricci_[(static_cast<std::size_t>(i) * n + j) * n + k] = sum;
            }
    return nabla_ricci_;
}

TensorValue ConnectionField::riemann_at(std::span<const double> p) const {
    const auto& R = riemann();
    TensorValue t(n_, {Variance::Up, Variance::Down, Variance::Down, Variance::Down});
    for (std::size_t i = 0; i < R.size(); ++i) t.data()[i] = R[i].evaluate(p);
    return t;
}

TensorValue ConnectionField::ricci_at(std::span<const double> p) const {
    const auto& S = ricci();
    TensorValue t(n_, {Variance::Down, Variance::Down});
    for (std::size_t i = 0; i < S.size(); ++i) t.data()[i] = S[i].evaluate(p);
    return t;
}

TensorValue ConnectionField::nabla_ricci_at(std::span<const double> p) const {
    const auto& N = nabla_ricci();
    TensorValue t(n_, {Variance::Down, Variance::Down, Variance::Down});
    for (std::size_t i = 0; i < N.size(); ++i) t.data()[i] = N[i].evaluate(p);
    return t;
}

double ConnectionField::scalar_at(std::span<const double> p, const Matrix& ginv) const {
    TensorValue S = ricci_at(p);
    double r = 0.0;
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) r += ginv(j, k) * S({j, k});
    return r;
}

void ConnectionField::ensure_built() const {
    (void)nabla_ricci();
}

// ---------------------------------------------------------------------------
// ManifoldGeometry
// ---------------------------------------------------------------------------

ManifoldGeometry::ManifoldGeometry(ChartManifold chart) : chart_(std::move(chart)) {
    const int n = chart_.dim();
    ginv_ = symbolic_inverse(chart_.metric, n);

    // Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij), built for i<=j and
    // shared across (i,j)/(j,i) so the symmetry is exact.
    std::vector<Expr> dg(static_cast<std::size_t>(n) * n * n);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[(static_cast<std::size_t>(l) * n + i) * n + j] = chart_.g(i, j).derivative(l);
    auto d = [&](int l, int i, int j) -> const Expr& {
        return dg[(static_cast<std::size_t>(l) * n + i) * n + j];
    };

    std::vector<Expr> gamma(static_cast<std::size_t>(n) * n * n, Expr::constant(0.0));
    const Expr half = Expr::constant(0.5);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Expr sum = Expr::constant(0.0);
                for (int l = 0; l < n; ++l) {
                    const Expr& gkl = ginv(k, l);
                    if (gkl.is_zero()) continue;
                    sum = sum + gkl * (d(i, j, l) + d(j, i, l) - d(l, i, j));
                }
                Expr value = half * sum;
                gamma[(static_cast<std::size_t>(k) * n + i) * n + j] = value;
                gamma[(static_cast<std::size_t>(k) * n + j) * n + i] = value;
            }
    lc_ = ConnectionField(n, ConnectionKind::LeviCivita, std::move(gamma));
}

Matrix ManifoldGeometry::metric_at(std::span<const double> p) const {
    const int n = dim();
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = chart_.g(i, j).evaluate(p);
    return g;
}

Matrix ManifoldGeometry::metric_inverse_at(std::span<const double> p) const {
    return invert(metric_at(p));
}

void ManifoldGeometry::validate_at(const std::vector<Vec>& points) const {
    for (const auto& p : points) {
        Matrix g = metric_at(p);
        Vec ev = sym_eigenvalues(g);
        if (ev.front() <= 1e-10)
            throw ConfigError("metric not positive definite inside the domain box");
    }
}

ConnectionField ManifoldGeometry::make_ssmc(const VectorFieldSpec& P) const {
    const int n = dim();
    if (static_cast<int>(P.components.size()) != n)
        throw ConfigError("vector field component count != dimension");

    std::vector<Expr> pi(static_cast<std::size_t>(n), Expr::constant(0.0));
    for (int j = 0; j < n; ++j) {
        Expr sum = Expr::constant(0.0);
        for (int l = 0; l < n; ++l) sum = sum + chart_.g(j, l) * P.components[static_cast<std::size_t>(l)];
        pi[static_cast<std::size_t>(j)] = sum;
    }

    std::vector<Expr> gamma(static_cast<std::size_t>(n) * n * n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Expr v = lc_.gamma(k, i, j);
                if (k == i) v = v + pi[static_cast<std::size_t>(j)];
                v = v - chart_.g(i, j) * P.components[static_cast<std::size_t>(k)];
                gamma[(static_cast<std::size_t>(k) * n + i) * n + j] = v;
            }
    return ConnectionField(n, ConnectionKind::SemiSymmetric, std::move(gamma));
}

GradHess ManifoldGeometry::grad_hess_laplace(const Expr& phi, std::span<const double> p) const {
    const int n = dim();
    Vec dphi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dphi[static_cast<std::size_t>(i)] = phi.derivative(i).evaluate(p);

    Matrix ginv_v = metric_inverse_at(p);
    GradHess out;
    out.grad = mat_vec(ginv_v, dphi);

    TensorValue gam = lc_.coeffs_at(p);
    out.hess = Matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = phi.derivative(i).derivative(j).evaluate(p);
            for (int m = 0; m < n; ++m) v -= gam({m, i, j}) * dphi[static_cast<std::size_t>(m)];
            out.hess(i, j) = v;
        }

    out.laplace = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.laplace += ginv_v(i, j) * out.hess(i, j);
    return out;
}

TensorValue ssmc_curvature_from_relation(const TensorValue& riemann_lc, const Matrix& g,
                                         const Matrix& nabla_p, std::span<const double> p_vec) {
    const int n = g.n;
    // pi_i = g_ij P^j ; A_ik = g(e_k, nab_i P) = g_km (nab_i P)^m ; piP = pi(P)
    Vec pi(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pi[static_cast<std::size_t>(i)] += g(i, j) * p_vec[static_cast<std::size_t>(j)];
    double piP = 0.0;
    for (int i = 0; i < n; ++i) piP += pi[static_cast<std::size_t>(i)] * p_vec[static_cast<std::size_t>(i)];
    Matrix A(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double v = 0.0;
            for (int m = 0; m < n; ++m) v += g(k, m) * nabla_p(i, m);
            A(i, k) = v;
        }

    TensorValue out(n, {Variance::Up, Variance::Down, Variance::Down, Variance::Down});
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double v = riemann_lc({l, i, j, k});
                    if (l == j) v += A(i, k);
                    if (l == i) v -= A(j, k);
                    v += g(i, k) * nabla_p(j, l);
                    v -= g(j, k) * nabla_p(i, l);
                    if (l == j) v += piP * g(i, k);
                    if (l == i) v -= piP * g(j, k);
                    v += (g(j, k) * pi[static_cast<std::size_t>(i)] - g(i, k) * pi[static_cast<std::size_t>(j)]) *
                         p_vec[static_cast<std::size_t>(l)];
                    if (l == i) v += pi[static_cast<std::size_t>(k)] * pi[static_cast<std::size_t>(j)];
                    if (l == j) v -= pi[static_cast<std::size_t>(k)] * pi[static_cast<std::size_t>(i)];
                    out({l, i, j, k}) = v;
                }
    return out;
}

}  // namespace dwpc
