#include "dwpc/dwp.hpp"

#include <algorithm>
#include <cmath>

#include "dwpc/rng.hpp"

namespace dwpc {

DwpSpec DwpSpec::with_zero_p() const {
    DwpSpec s = *this;
    if (s.side != PSide::None) {
        int k = s.side == PSide::Base ? n1() : n2();
        s.p = VectorFieldSpec::zero(k);
    }
    return s;
}

ChartManifold assemble(const DwpSpec& spec) {
    const int n1 = spec.n1(), n2 = spec.n2(), n = spec.n();
    for (const auto& bc : spec.base.coords)
        for (const auto& fc : spec.fiber.coords)
            if (bc == fc) throw ConfigError("base and fiber share coordinate name '" + bc + "'");

    std::vector<std::string> coords = spec.base.coords;
    coords.insert(coords.end(), spec.fiber.coords.begin(), spec.fiber.coords.end());

    Expr f2 = square(spec.f.shifted(n1));
    Expr h2 = square(spec.h);

    std::vector<std::vector<Expr>> g(static_cast<std::size_t>(n),
                                     std::vector<Expr>(static_cast<std::size_t>(n), Expr::constant(0.0)));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b <= a; ++b)
            g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = f2 * spec.base.g(a, b);
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v <= u; ++v)
            g[static_cast<std::size_t>(n1 + u)][static_cast<std::size_t>(n1 + v)] =
                h2 * spec.fiber.g(u, v).shifted(n1);

    Box box;
    box.ranges = spec.base.box.ranges;
    box.ranges.insert(box.ranges.end(), spec.fiber.box.ranges.begin(), spec.fiber.box.ranges.end());

    return ChartManifold::make(std::move(coords), std::move(g), std::move(box));
}

VectorFieldSpec lift_p(const DwpSpec& spec) {
    const int n1 = spec.n1(), n = spec.n();
    VectorFieldSpec out = VectorFieldSpec::zero(n);
    if (spec.side == PSide::None || spec.p.components.empty()) return out;
    if (spec.side == PSide::Base) {
        if (static_cast<int>(spec.p.components.size()) != n1)
            throw ConfigError("P component count != base dimension");
        for (int a = 0; a < n1; ++a) out.components[static_cast<std::size_t>(a)] = spec.p.components[static_cast<std::size_t>(a)];
    } else {
        if (static_cast<int>(spec.p.components.size()) != spec.n2())
            throw ConfigError("P component count != fiber dimension");
        for (int u = 0; u < spec.n2(); ++u)
            out.components[static_cast<std::size_t>(n1 + u)] =
                spec.p.components[static_cast<std::size_t>(u)].shifted(n1);
    }
    return out;
}

std::string Convention::name() const {
    std::string s;
    s += ambient_grad ? "grad:ambient" : "grad:factor";
    s += ambient_pi ? ",pi:ambient" : ",pi:factor";
    s += ambient_div ? ",div:ambient" : ",div:factor";
    return s;
}

const std::vector<Convention>& convention_candidates() {
    // Spec default first (factor gradients, ambient pi, factor divergence),
    // then the ambient-normalized readings.
    static const std::vector<Convention> list = {
        {false, true, false},
        {true, true, false},
        {true, true, true},
        {false, false, false},
        {true, false, false},
    };
    return list;
}

// ---------------------------------------------------------------------------
// DwpModel
// ---------------------------------------------------------------------------

DwpModel::DwpModel(DwpSpec spec)
    : spec_(std::move(spec)),
      product_(assemble(spec_)),
      base_(spec_.base),
      fiber_(spec_.fiber),
      lifted_p_(lift_p(spec_)) {
    product_ssmc_ = product_.make_ssmc(lifted_p_);

    const int n1 = spec_.n1(), n2 = spec_.n2();
    if (spec_.h.max_var_index() >= n1) throw ConfigError("h uses non-base coordinates");
    if (spec_.f.max_var_index() >= n2) throw ConfigError("f uses non-fiber coordinates");

    dh_.resize(static_cast<std::size_t>(n1));
    d2h_.resize(static_cast<std::size_t>(n1) * n1);
    for (int a = 0; a < n1; ++a) {
        dh_[static_cast<std::size_t>(a)] = spec_.h.derivative(a);
        for (int b = 0; b < n1; ++b)
            d2h_[static_cast<std::size_t>(a) * n1 + b] = dh_[static_cast<std::size_t>(a)].derivative(b);
    }
    df_.resize(static_cast<std::size_t>(n2));
    d2f_.resize(static_cast<std::size_t>(n2) * n2);
    for (int u = 0; u < n2; ++u) {
        df_[static_cast<std::size_t>(u)] = spec_.f.derivative(u);
        for (int v = 0; v < n2; ++v)
            d2f_[static_cast<std::size_t>(u) * n2 + v] = df_[static_cast<std::size_t>(u)].derivative(v);
    }

    const int np = spec_.n();
    dg_prod_.resize(static_cast<std::size_t>(np) * np * np);
    for (int l = 0; l < np; ++l)
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < np; ++j)
                dg_prod_[(static_cast<std::size_t>(l) * np + i) * np + j] =
                    product_.chart().g(i, j).derivative(l);
    d_lifted_p_.resize(static_cast<std::size_t>(np) * np);
    for (int i = 0; i < np; ++i)
        for (int k = 0; k < np; ++k)
            d_lifted_p_[static_cast<std::size_t>(i) * np + k] =
                lifted_p_.components[static_cast<std::size_t>(k)].derivative(i);

    if (spec_.side != PSide::None) {
        const ManifoldGeometry& side_geom = spec_.side == PSide::Base ? base_ : fiber_;
        const int k = side_geom.dim();
        p_comp_ = spec_.p.components;
        if (p_comp_.empty()) p_comp_.assign(static_cast<std::size_t>(k), Expr::constant(0.0));

        p_cov_.assign(static_cast<std::size_t>(k), Expr::constant(0.0));
        p_norm2_ = Expr::constant(0.0);
        for (int a = 0; a < k; ++a) {
            Expr s = Expr::constant(0.0);
            for (int b = 0; b < k; ++b) s = s + side_geom.chart().g(a, b) * p_comp_[static_cast<std::size_t>(b)];
            p_cov_[static_cast<std::size_t>(a)] = s;
            p_norm2_ = p_norm2_ + p_comp_[static_cast<std::size_t>(a)] * s;
        }

        const ConnectionField& lc = side_geom.levi_civita();
        nabla_p_.assign(static_cast<std::size_t>(k) * k, Expr::constant(0.0));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                Expr s = p_comp_[static_cast<std::size_t>(b)].derivative(a);
                for (int c = 0; c < k; ++c)
                    s = s + lc.gamma(b, a, c) * p_comp_[static_cast<std::size_t>(c)];
                nabla_p_[static_cast<std::size_t>(a) * k + b] = s;
            }
        div_p_ = Expr::constant(0.0);
        for (int a = 0; a < k; ++a) div_p_ = div_p_ + nabla_p_[static_cast<std::size_t>(a) * k + a];
    }
}

std::vector<Vec> DwpModel::sample_points(std::uint64_t seed, int count) const {
    Rng rng(derive_seed(seed, "points", spec_.id));
    const Box& box = product_.chart().box;
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vec p(box.ranges.size());
        for (std::size_t c = 0; c < box.ranges.size(); ++c) {
            double lo = box.ranges[c][0], hi = box.ranges[c][1];
            double w = hi - lo;
            p[c] = rng.uniform(lo + 0.05 * w, hi - 0.05 * w);
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

void DwpModel::validate(const std::vector<Vec>& points) const {
    const int n1 = spec_.n1();
    Expr f_shift = spec_.f.shifted(n1);
    std::vector<Vec> xs, ys;
    for (const auto& p : points) {
        if (spec_.h.evaluate(p) <= 0.0) throw ConfigError(spec_.id + ": warping h not positive");
        if (f_shift.evaluate(p) <= 0.0) throw ConfigError(spec_.id + ": warping f not positive");
        xs.emplace_back(p.begin(), p.begin() + n1);
        ys.emplace_back(p.begin() + n1, p.end());
    }
    base_.validate_at(xs);
    fiber_.validate_at(ys);
    product_.validate_at(points);
}

DwpPoint DwpModel::at(const Vec& p) const {
    const int n1 = spec_.n1(), n2 = spec_.n2();
    DwpPoint pt;
    pt.model = this;
    pt.p = p;
    pt.x.assign(p.begin(), p.begin() + n1);
    pt.y.assign(p.begin() + n1, p.end());

    pt.g = product_.metric_at(p);
    pt.ginv = invert(pt.g);
    pt.gamma_lc = product_.levi_civita().coeffs_at(p);
    pt.gamma_sm = product_ssmc_.coeffs_at(p);
    pt.R_lc = product_.levi_civita().riemann_at(p);
    pt.R_sm = product_ssmc_.riemann_at(p);
    pt.S_lc = product_.levi_civita().ricci_at(p);
    pt.S_sm = product_ssmc_.ricci_at(p);
    pt.r_lc = 0.0;
    pt.r_sm = 0.0;
    for (int j = 0; j < pt.g.n; ++j)
        for (int k = 0; k < pt.g.n; ++k) {
            pt.r_lc += pt.ginv(j, k) * pt.S_lc({j, k});
            pt.r_sm += pt.ginv(j, k) * pt.S_sm({j, k});
        }

    pt.gB = base_.metric_at(pt.x);
    pt.gBinv = invert(pt.gB);
    pt.gF = fiber_.metric_at(pt.y);
    pt.gFinv = invert(pt.gF);
    pt.hv = spec_.h.evaluate(pt.x);
    pt.fv = spec_.f.evaluate(pt.y);

    pt.dh.resize(static_cast<std::size_t>(n1));
    for (int a = 0; a < n1; ++a) pt.dh[static_cast<std::size_t>(a)] = dh_[static_cast<std::size_t>(a)].evaluate(pt.x);
    pt.df.resize(static_cast<std::size_t>(n2));
    for (int u = 0; u < n2; ++u) pt.df[static_cast<std::size_t>(u)] = df_[static_cast<std::size_t>(u)].evaluate(pt.y);

    pt.gammaB = base_.levi_civita().coeffs_at(pt.x);
    pt.gammaF = fiber_.levi_civita().coeffs_at(pt.y);

    pt.hessB_h = Matrix(n1);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            double v = d2h_[static_cast<std::size_t>(a) * n1 + b].evaluate(pt.x);
            for (int m = 0; m < n1; ++m) v -= pt.gammaB({m, a, b}) * pt.dh[static_cast<std::size_t>(m)];
            pt.hessB_h(a, b) = v;
        }
    pt.hessF_f = Matrix(n2);
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v) {
            double w = d2f_[static_cast<std::size_t>(u) * n2 + v].evaluate(pt.y);
            for (int m = 0; m < n2; ++m) w -= pt.gammaF({m, u, v}) * pt.df[static_cast<std::size_t>(m)];
            pt.hessF_f(u, v) = w;
        }

    pt.RB = base_.levi_civita().riemann_at(pt.x);
    pt.RF = fiber_.levi_civita().riemann_at(pt.y);
    TensorValue sb = base_.levi_civita().ricci_at(pt.x);
    TensorValue sf = fiber_.levi_civita().ricci_at(pt.y);
    pt.SB = Matrix(n1);
    pt.SF = Matrix(n2);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) pt.SB(a, b) = sb({a, b});
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v) pt.SF(u, v) = sf({u, v});
    pt.rB = 0.0;
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) pt.rB += pt.gBinv(a, b) * pt.SB(a, b);
    pt.rF = 0.0;
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v) pt.rF += pt.gFinv(u, v) * pt.SF(u, v);

    if (spec_.side != PSide::None) {
        const Vec& fp = spec_.side == PSide::Base ? pt.x : pt.y;
        const int k = static_cast<int>(p_comp_.size());
        pt.Pv.resize(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) pt.Pv[static_cast<std::size_t>(a)] = p_comp_[static_cast<std::size_t>(a)].evaluate(fp);
        pt.nablaP = Matrix(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                pt.nablaP(a, b) = nabla_p_[static_cast<std::size_t>(a) * k + b].evaluate(fp);
        pt.divP_factor = div_p_.evaluate(fp);
    } else {
        pt.Pv.clear();
        pt.nablaP = Matrix(0);
        pt.divP_factor = 0.0;
    }
    return pt;
}

// ---------------------------------------------------------------------------
// DwpPoint
// ---------------------------------------------------------------------------

PSide DwpPoint::side() const { return model->spec().side; }

Vec DwpPoint::lift_base(std::span<const double> xb) const {
    Vec v(static_cast<std::size_t>(n()), 0.0);
    for (int a = 0; a < n1(); ++a) v[static_cast<std::size_t>(a)] = xb[static_cast<std::size_t>(a)];
    return v;
}

Vec DwpPoint::lift_fiber(std::span<const double> vf) const {
    Vec v(static_cast<std::size_t>(n()), 0.0);
    for (int u = 0; u < n2(); ++u) v[static_cast<std::size_t>(n1() + u)] = vf[static_cast<std::size_t>(u)];
    return v;
}

Vec DwpPoint::base_block(std::span<const double> v) const {
    return Vec(v.begin(), v.begin() + n1());
}

Vec DwpPoint::fiber_block(std::span<const double> v) const {
    return Vec(v.begin() + n1(), v.end());
}

Vec DwpPoint::o_nabla(std::span<const double> A, std::span<const double> B, bool ssmc) const {
    const TensorValue& G = ssmc ? gamma_sm : gamma_lc;
    Vec out(static_cast<std::size_t>(n()), 0.0);
    for (int k = 0; k < n(); ++k) {
        double s = 0.0;
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) s += A[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)] * G({k, i, j});
        out[static_cast<std::size_t>(k)] = s;
    }
    return out;
}

Vec DwpPoint::o_riemann(std::span<const double> A, std::span<const double> B,
                        std::span<const double> C, bool ssmc) const {
    const TensorValue& R = ssmc ? R_sm : R_lc;
    Vec out(static_cast<std::size_t>(n()), 0.0);
    for (int l = 0; l < n(); ++l) {
        double s = 0.0;
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j)
                for (int k = 0; k < n(); ++k)
                    s += R({l, i, j, k}) * A[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)] *
                         C[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(l)] = s;
    }
    return out;
}

double DwpPoint::o_ricci(std::span<const double> A, std::span<const double> B, bool ssmc) const {
    const TensorValue& S = ssmc ? S_sm : S_lc;
    double s = 0.0;
    for (int j = 0; j < n(); ++j)
        for (int k = 0; k < n(); ++k) s += S({j, k}) * A[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(k)];
    return s;
}

double DwpPoint::g_base(std::span<const double> X, std::span<const double> Y) const {
    return fv * fv * bilinear(gB, X, Y);
}

double DwpPoint::g_fiber(std::span<const double> V, std::span<const double> W) const {
    return hv * hv * bilinear(gF, V, W);
}

double DwpPoint::Xh(std::span<const double> X) const {
    double s = 0.0;
    for (int a = 0; a < n1(); ++a) s += X[static_cast<std::size_t>(a)] * dh[static_cast<std::size_t>(a)];
    return s;
}

double DwpPoint::Vf(std::span<const double> V) const {
    double s = 0.0;
    for (int u = 0; u < n2(); ++u) s += V[static_cast<std::size_t>(u)] * df[static_cast<std::size_t>(u)];
    return s;
}

double DwpPoint::HhB(std::span<const double> X, std::span<const double> Y) const {
    return bilinear(hessB_h, X, Y);
}

double DwpPoint::HfF(std::span<const double> V, std::span<const double> W) const {
    return bilinear(hessF_f, V, W);
}

Vec DwpPoint::grad_h(const Convention& cv) const {
    Vec g0 = mat_vec(gBinv, dh);
    if (cv.ambient_grad)
        for (double& v : g0) v /= fv * fv;
    return g0;
}

Vec DwpPoint::grad_f(const Convention& cv) const {
    Vec g0 = mat_vec(gFinv, df);
    if (cv.ambient_grad)
        for (double& v : g0) v /= hv * hv;
    return g0;
}

double DwpPoint::norm2_grad_h(const Convention& cv) const {
    double s = bilinear(gBinv, dh, dh);
    return cv.ambient_grad ? s / (fv * fv) : s;
}

double DwpPoint::norm2_grad_f(const Convention& cv) const {
    double s = bilinear(gFinv, df, df);
    return cv.ambient_grad ? s / (hv * hv) : s;
}

double DwpPoint::lap_h(const Convention& cv) const {
    double s = 0.0;
    for (int a = 0; a < n1(); ++a)
        for (int b = 0; b < n1(); ++b) s += gBinv(a, b) * hessB_h(a, b);
    return cv.ambient_grad ? s / (fv * fv) : s;
}

double DwpPoint::lap_f(const Convention& cv) const {
    double s = 0.0;
    for (int u = 0; u < n2(); ++u)
        for (int v = 0; v < n2(); ++v) s += gFinv(u, v) * hessF_f(u, v);
    return cv.ambient_grad ? s / (hv * hv) : s;
}

Vec DwpPoint::nablaF_gradf(std::span<const double> V, const Convention& cv) const {
    // nab_V grad(f) = gF^-1 Hess(f) V since the connection kills the metric
    Vec hv_ = mat_vec(hessF_f, V);
    Vec out = mat_vec(gFinv, hv_);
    if (cv.ambient_grad)
        for (double& v : out) v /= this->hv * this->hv;
    return out;
}

Vec DwpPoint::nablaB_gradh(std::span<const double> X, const Convention& cv) const {
    Vec hx = mat_vec(hessB_h, X);
    Vec out = mat_vec(gBinv, hx);
    if (cv.ambient_grad)
        for (double& v : out) v /= fv * fv;
    return out;
}

double DwpPoint::pi_base(std::span<const double> X, const Convention& cv) const {
    double s = bilinear(gB, X, Pv);
    return cv.ambient_pi ? fv * fv * s : s;
}

double DwpPoint::pi_fiber(std::span<const double> V, const Convention& cv) const {
    double s = bilinear(gF, V, Pv);
    return cv.ambient_pi ? hv * hv * s : s;
}

double DwpPoint::pi_P(const Convention& cv) const {
    if (Pv.empty()) return 0.0;
    double s = side() == PSide::Base ? bilinear(gB, Pv, Pv) : bilinear(gF, Pv, Pv);
    double warp2 = side() == PSide::Base ? fv * fv : hv * hv;
    return cv.ambient_pi ? warp2 * s : s;
}

double DwpPoint::Ph() const {
    if (side() != PSide::Base) return 0.0;
    return Xh(Pv);
}

double DwpPoint::Pf() const {
    if (side() != PSide::Fiber) return 0.0;
    return Vf(Pv);
}

double DwpPoint::div_P(const Convention& cv) const {
    if (Pv.empty()) return 0.0;
    double d = divP_factor;
    if (cv.ambient_div) {
        if (side() == PSide::Base)
            d += n2() * Ph() / hv;
        else
            d += n1() * Pf() / fv;
    }
    return d;
}

Vec DwpPoint::nablaP_along(std::span<const double> A) const {
    const int k = nablaP.n;
    Vec out(static_cast<std::size_t>(k), 0.0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out[static_cast<std::size_t>(b)] += A[static_cast<std::size_t>(a)] * nablaP(a, b);
    return out;
}

double DwpPoint::g_nablaP(std::span<const double> Y, std::span<const double> X) const {
    Vec nx = nablaP_along(X);
    if (side() == PSide::Base) return fv * fv * bilinear(gB, Y, nx);
    return hv * hv * bilinear(gF, Y, nx);
}

double DwpPoint::factor_scale(const Convention& cv) const {
    if (!cv.ambient_pi) return 1.0;
    return side() == PSide::Base ? fv * fv : hv * hv;
}

Vec DwpPoint::fssmc_conn(std::span<const double> A, std::span<const double> B,
                         const Convention& cv) const {
    const bool on_base = side() == PSide::Base;
    const TensorValue& G = on_base ? gammaB : gammaF;
    const Matrix& gm = on_base ? gB : gF;
    const int k = gm.n;
    const double c = factor_scale(cv);
    Vec out(static_cast<std::size_t>(k), 0.0);
    for (int m = 0; m < k; ++m) {
        double s = 0.0;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) s += A[static_cast<std::size_t>(a)] * B[static_cast<std::size_t>(b)] * G({m, a, b});
        out[static_cast<std::size_t>(m)] = s;
    }
    if (!Pv.empty()) {
        double piB = c * bilinear(gm, B, Pv);
        double gAB = c * bilinear(gm, A, B);
        for (int m = 0; m < k; ++m)
            out[static_cast<std::size_t>(m)] += piB * A[static_cast<std::size_t>(m)] - gAB * Pv[static_cast<std::size_t>(m)];
    }
    return out;
}

TensorValue DwpPoint::fssmc_riemann(const Convention& cv) const {
    const bool on_base = side() == PSide::Base;
    const TensorValue& R = on_base ? RB : RF;
    const Matrix& gm = on_base ? gB : gF;
    const double c = factor_scale(cv);
    Matrix gs(gm.n);
    for (int i = 0; i < gm.n; ++i)
        for (int j = 0; j < gm.n; ++j) gs(i, j) = c * gm(i, j);
    Vec pv = Pv.empty() ? Vec(static_cast<std::size_t>(gm.n), 0.0) : Pv;
    Matrix np = nablaP.n == gm.n ? nablaP : Matrix(gm.n);
    return ssmc_curvature_from_relation(R, gs, np, pv);
}

Vec DwpPoint::fssmc_curv(std::span<const double> A, std::span<const double> B,
                         std::span<const double> C, const Convention& cv) const {
    TensorValue R = fssmc_riemann(cv);
    const int k = R.dim();
    Vec out(static_cast<std::size_t>(k), 0.0);
    for (int l = 0; l < k; ++l) {
        double s = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int m = 0; m < k; ++m)
                    s += R({l, i, j, m}) * A[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)] *
                         C[static_cast<std::size_t>(m)];
        out[static_cast<std::size_t>(l)] = s;
    }
    return out;
}

double DwpPoint::fssmc_ricci(std::span<const double> A, std::span<const double> B,
                             const Convention& cv) const {
    TensorValue R = fssmc_riemann(cv);
    const int k = R.dim();
    double s = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = 0; m < k; ++m)
                s += R({i, i, j, m}) * A[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(m)];
    return s;
}

double DwpPoint::fssmc_scalar(const Convention& cv) const {
    const bool on_base = side() == PSide::Base;
    const Matrix& gi = on_base ? gBinv : gFinv;
    const double c = factor_scale(cv);
    TensorValue R = fssmc_riemann(cv);
    const int k = R.dim();
    double s = 0.0;
    for (int j = 0; j < k; ++j)
        for (int m = 0; m < k; ++m) {
            double sj = 0.0;
            for (int i = 0; i < k; ++i) sj += R({i, i, j, m});
            s += gi(j, m) / c * sj;
        }
    return s;
}

Matrix DwpModel::ambient_nabla_p_at(const DwpPoint& pt) const {
    const int n = spec_.n();
    Vec pv(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pv[static_cast<std::size_t>(k)] = lifted_p_.components[static_cast<std::size_t>(k)].evaluate(pt.p);
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double v = d_lifted_p_[static_cast<std::size_t>(i) * n + k].evaluate(pt.p);
            for (int m = 0; m < n; ++m) v += pt.gamma_lc({k, i, m}) * pv[static_cast<std::size_t>(m)];
            out(i, k) = v;
        }
    return out;
}

double DwpModel::metric_compat_residual(const DwpPoint& pt, bool ssmc) const {
    const int n = spec_.n();
    const TensorValue& G = ssmc ? pt.gamma_sm : pt.gamma_lc;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double v = dg_prod_[(static_cast<std::size_t>(i) * n + j) * n + k].evaluate(pt.p);
                for (int m = 0; m < n; ++m)
                    v -= G({m, i, j}) * pt.g(m, k) + G({m, i, k}) * pt.g(j, m);
                worst = std::max(worst, std::abs(v));
            }
    return worst;
}

Vec DwpModel::ambient_pi_at(const DwpPoint& pt) const {
    const int n = spec_.n();
    Vec pv(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pv[static_cast<std::size_t>(k)] = lifted_p_.components[static_cast<std::size_t>(k)].evaluate(pt.p);
    Vec pi(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) pi[static_cast<std::size_t>(j)] += pt.g(j, l) * pv[static_cast<std::size_t>(l)];
    return pi;
}

double DwpModel::factor_ssmc_nabla_ricci_diag(std::span<const double> xpt,
                                              std::span<const double> X, double c) const {
    if (spec_.side == PSide::None) throw ConfigError("no associated field");
    const ManifoldGeometry& geom = spec_.side == PSide::Base ? base_ : fiber_;
    const int k = geom.dim();
    const ConnectionField& lc = geom.levi_civita();
    const auto& SB = lc.ricci();  // symbolic factor Ricci

    // S~_bc(c) = S_bc - (k-2) c W_bc - c g_bc divP - (k-2) c^2 q g_bc + (k-2) c^2 pi0_b pi0_c
    // with W_bc = (nab_b P)^m g_mc, pi0 = gP, q = g(P,P).
    auto W = [&](int b, int cc) {
        Expr s = Expr::constant(0.0);
        for (int m = 0; m < k; ++m)
            s = s + nabla_p_[static_cast<std::size_t>(b) * k + m] * geom.chart().g(m, cc);
        return s;
    };

    std::vector<double> st(static_cast<std::size_t>(k) * k);     // S~ values
    std::vector<double> dst(static_cast<std::size_t>(k) * k * k);  // d_a S~
    const double km2 = k - 2;
    for (int b = 0; b < k; ++b)
        for (int cc = 0; cc < k; ++cc) {
            Expr s0 = SB[static_cast<std::size_t>(b) * k + cc];
            Expr t1 = Expr::constant(-km2) * W(b, cc) - geom.chart().g(b, cc) * div_p_;
            Expr t2 = Expr::constant(km2) *
                      (p_cov_[static_cast<std::size_t>(b)] * p_cov_[static_cast<std::size_t>(cc)] -
                       p_norm2_ * geom.chart().g(b, cc));
            st[static_cast<std::size_t>(b) * k + cc] =
                s0.evaluate(xpt) + c * t1.evaluate(xpt) + c * c * t2.evaluate(xpt);
            for (int a = 0; a < k; ++a)
                dst[(static_cast<std::size_t>(a) * k + b) * k + cc] =
                    s0.derivative(a).evaluate(xpt) + c * t1.derivative(a).evaluate(xpt) +
                    c * c * t2.derivative(a).evaluate(xpt);
        }

    // Gamma~^m_ab(c) = Gamma^m_ab + c (delta^m_a pi0_b - g_ab P^m)
    TensorValue gam = lc.coeffs_at(xpt);
    std::vector<double> pi0(static_cast<std::size_t>(k)), pvv(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        pi0[static_cast<std::size_t>(a)] = p_cov_[static_cast<std::size_t>(a)].evaluate(xpt);
        pvv[static_cast<std::size_t>(a)] = p_comp_[static_cast<std::size_t>(a)].evaluate(xpt);
    }
    Matrix gv(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) gv(a, b) = geom.chart().g(a, b).evaluate(xpt);
    auto gamma_t = [&](int m, int a, int b) {
        double v = gam({m, a, b});
        if (m == a) v += c * pi0[static_cast<std::size_t>(b)];
        v -= c * gv(a, b) * pvv[static_cast<std::size_t>(m)];
        return v;
    };

    double out = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int cc = 0; cc < k; ++cc) {
                double v = dst[(static_cast<std::size_t>(a) * k + b) * k + cc];
                for (int m = 0; m < k; ++m) {
                    v -= gamma_t(m, a, b) * st[static_cast<std::size_t>(m) * k + cc];
                    v -= gamma_t(m, a, cc) * st[static_cast<std::size_t>(b) * k + m];
                }
                out += X[static_cast<std::size_t>(a)] * X[static_cast<std::size_t>(b)] * X[static_cast<std::size_t>(cc)] * v;
            }
    return out;
}

}  // namespace dwpc
