#include "dwpc/identities.hpp"

#include <algorithm>
#include <cmath>

namespace dwpc {

ArgDraw draw_args(Rng& rng, int n1, int n2) {
    auto vec = [&](int k) {
        Vec v(static_cast<std::size_t>(k));
        for (auto& c : v) c = rng.uniform(-1.0, 1.0);
        return v;
    };
    ArgDraw a;
    a.X = vec(n1);
    a.Y = vec(n1);
    a.Z = vec(n1);
    a.U = vec(n2);
    a.V = vec(n2);
    a.W = vec(n2);
    return a;
}

double ValuePair::residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) r = std::max(r, std::abs(closed[i] - oracle[i]));
    return r;
}

double ValuePair::scale() const {
    double s = 0.0;
    for (double v : closed) s = std::max(s, std::abs(v));
    for (double v : oracle) s = std::max(s, std::abs(v));
    return s;
}

namespace {

Vec vadd(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec vaxpy(Vec a, double s, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

Vec vscale(Vec a, double s) {
    for (auto& v : a) v *= s;
    return a;
}

Vec concat(Vec a, const Vec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// A^i B^j G^k_ij for a factor connection value.
Vec conn_apply(const TensorValue& G, std::span<const double> A, std::span<const double> B) {
    const int k = G.dim();
    Vec out(static_cast<std::size_t>(k), 0.0);
    for (int m = 0; m < k; ++m) {
        double s = 0.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                s += A[static_cast<std::size_t>(i)] * B[static_cast<std::size_t>(j)] * G({m, i, j});
        out[static_cast<std::size_t>(m)] = s;
    }
    return out;
}

/// R(A,B)C for a factor Riemann value.
Vec curv_apply(const TensorValue& R, std::span<const double> A, std::span<const double> B,
               std::span<const double> C) {
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

// Doubly-warped cross terms absent from the displayed curvature formulas;
// each vanishes as soon as one warping is constant. The oracle confirms them.
// d1: (1/(fh)) ((Xh) g(Y,Z) - (Yh) g(X,Z)) grad f          (vertical)
Vec delta_rxyz(const DwpPoint& pt, const Vec& X, const Vec& Y, const Vec& Z, const Convention& cv) {
    double coef = (pt.Xh(X) * pt.g_base(Y, Z) - pt.Xh(Y) * pt.g_base(X, Z)) / (pt.fv * pt.hv);
    return vscale(pt.lift_fiber(pt.grad_f(cv)), coef);
}

// d2: (Vf/f) ((Yh/h) X - (1/h) g(X,Y) grad h)              (horizontal)
Vec delta_rxvy(const DwpPoint& pt, const Vec& X, const Vec& V, const Vec& Y, const Convention& cv) {
    double vf = pt.Vf(V) / pt.fv;
    Vec out = vscale(pt.lift_base(X), vf * pt.Xh(Y) / pt.hv);
    return vaxpy(std::move(out), -vf * pt.g_base(X, Y) / pt.hv, pt.lift_base(pt.grad_h(cv)));
}

// d4: (Xh/h) ((1/f) g(V,W) grad f - (Wf/f) V)              (vertical)
Vec delta_rxvw(const DwpPoint& pt, const Vec& X, const Vec& V, const Vec& W, const Convention& cv) {
    double xh = pt.Xh(X) / pt.hv;
    Vec out = vscale(pt.lift_fiber(pt.grad_f(cv)), xh * pt.g_fiber(V, W) / pt.fv);
    return vaxpy(std::move(out), -xh * pt.Vf(W) / pt.fv, pt.lift_fiber(V));
}

// d6: (1/(hf)) ((Uf) g(V,W) - (Vf) g(U,W)) grad h          (horizontal)
Vec delta_ruvw(const DwpPoint& pt, const Vec& U, const Vec& V, const Vec& W, const Convention& cv) {
    double coef = (pt.Vf(U) * pt.g_fiber(V, W) - pt.Vf(V) * pt.g_fiber(U, W)) / (pt.hv * pt.fv);
    return vscale(pt.lift_base(pt.grad_h(cv)), coef);
}

// --------------------------------------------------------------------------
// Levi-Civita connection (5 cases)
// --------------------------------------------------------------------------

ValuePair l1_tan_xy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vscale(pt.grad_f(cv), -pt.g_base(a.X, a.Y) / pt.fv);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), false));
    return {std::move(closed), std::move(oracle)};
}

ValuePair l1_nor_xy(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = conn_apply(pt.gammaB, a.X, a.Y);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), false));
    return {std::move(closed), std::move(oracle)};
}

ValuePair l1_mixed_xv(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = vaxpy(vscale(pt.lift_fiber(a.V), pt.Xh(a.X) / pt.hv), pt.Vf(a.V) / pt.fv,
                       pt.lift_base(a.X));
    Vec o1 = pt.o_nabla(pt.lift_base(a.X), pt.lift_fiber(a.V), false);
    Vec o2 = pt.o_nabla(pt.lift_fiber(a.V), pt.lift_base(a.X), false);
    return {concat(closed, closed), concat(std::move(o1), o2)};
}

ValuePair l1_nor_vw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vscale(pt.grad_h(cv), -pt.g_fiber(a.V, a.W) / pt.hv);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), false));
    return {std::move(closed), std::move(oracle)};
}

ValuePair l1_tan_vw(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = conn_apply(pt.gammaF, a.V, a.W);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), false));
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Levi-Civita curvature (6 cases)
// --------------------------------------------------------------------------

ValuePair l2_rxyz(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = pt.lift_base(curv_apply(pt.RB, a.X, a.Y, a.Z));
    double n2f = pt.norm2_grad_f(cv) / (pt.fv * pt.fv);
    closed = vaxpy(std::move(closed), n2f * pt.g_base(a.X, a.Z), pt.lift_base(a.Y));
    closed = vaxpy(std::move(closed), -n2f * pt.g_base(a.Y, a.Z), pt.lift_base(a.X));
    if (corrected) closed = vadd(std::move(closed), delta_rxyz(pt, a.X, a.Y, a.Z, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_base(a.Z), false);
    return {std::move(closed), std::move(oracle)};
}

ValuePair l2_rxvy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = vscale(pt.lift_fiber(a.V), pt.HhB(a.X, a.Y) / pt.hv);
    closed = vaxpy(std::move(closed), pt.g_base(a.X, a.Y) / pt.fv,
                   pt.lift_fiber(pt.nablaF_gradf(a.V, cv)));
    if (corrected) closed = vadd(std::move(closed), delta_rxvy(pt, a.X, a.V, a.Y, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_fiber(a.V), pt.lift_base(a.Y), false);
    return {std::move(closed), std::move(oracle)};
}

ValuePair l2_rxyv(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    double vf = pt.Vf(a.V) / pt.fv;
    Vec closed = vscale(pt.lift_base(a.X), vf * pt.Xh(a.Y) / pt.hv);
    closed = vaxpy(std::move(closed), -vf * pt.Xh(a.X) / pt.hv, pt.lift_base(a.Y));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_fiber(a.V), false);
    return {std::move(closed), std::move(oracle)};
}

ValuePair l2_rxvw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = vscale(pt.lift_base(a.X), -pt.HfF(a.V, a.W) / pt.fv);
    closed = vaxpy(std::move(closed), -pt.g_fiber(a.V, a.W) / pt.hv,
                   pt.lift_base(pt.nablaB_gradh(a.X, cv)));
    if (corrected) closed = vadd(std::move(closed), delta_rxvw(pt, a.X, a.V, a.W, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_fiber(a.V), pt.lift_fiber(a.W), false);
    return {std::move(closed), std::move(oracle)};
}

ValuePair l2_rvwx(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    double xh = pt.Xh(a.X) / pt.hv;
    Vec closed = vscale(pt.lift_fiber(a.V), xh * pt.Vf(a.W) / pt.fv);
    closed = vaxpy(std::move(closed), -xh * pt.Vf(a.V) / pt.fv, pt.lift_fiber(a.W));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_fiber(a.W), pt.lift_base(a.X), false);
    return {std::move(closed), std::move(oracle)};
}

ValuePair l2_rvwu(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = pt.lift_fiber(curv_apply(pt.RF, a.V, a.W, a.U));
    double n2h = pt.norm2_grad_h(cv) / (pt.hv * pt.hv);
    closed = vaxpy(std::move(closed), n2h * pt.g_fiber(a.V, a.U), pt.lift_fiber(a.W));
    closed = vaxpy(std::move(closed), -n2h * pt.g_fiber(a.W, a.U), pt.lift_fiber(a.V));
    if (corrected) closed = vadd(std::move(closed), delta_ruvw(pt, a.V, a.W, a.U, cv));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_fiber(a.W), pt.lift_fiber(a.U), false);
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Levi-Civita Ricci + scalar
// --------------------------------------------------------------------------

ValuePair l3_sxy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double closed = bilinear(pt.SB, a.X, a.Y) - (pt.n2() / pt.hv) * pt.HhB(a.X, a.Y) -
                    pt.g_base(a.X, a.Y) *
                        ((pt.n1() - 1) * pt.norm2_grad_f(cv) / (pt.fv * pt.fv) +
                         pt.lap_f(cv) / pt.fv);
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_base(a.Y), false);
    return {{closed}, {oracle}};
}

ValuePair l3_sxv(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    double closed = (pt.n() - 2) * pt.Xh(a.X) * pt.Vf(a.V) / (pt.hv * pt.fv);
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_fiber(a.V), false);
    return {{closed}, {oracle}};
}

ValuePair l3_svw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double closed = bilinear(pt.SF, a.V, a.W) - (pt.n1() / pt.fv) * pt.HfF(a.V, a.W) -
                    pt.g_fiber(a.V, a.W) *
                        ((pt.n2() - 1) * pt.norm2_grad_h(cv) / (pt.hv * pt.hv) +
                         pt.lap_h(cv) / pt.hv);
    double oracle = pt.o_ricci(pt.lift_fiber(a.V), pt.lift_fiber(a.W), false);
    return {{closed}, {oracle}};
}

ValuePair l4_scalar(const DwpPoint& pt, const ArgDraw&, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2();
    double closed = pt.rB / (pt.fv * pt.fv) + pt.rF / (pt.hv * pt.hv) -
                    2.0 * n1 * pt.lap_f(cv) / pt.fv - 2.0 * n2 * pt.lap_h(cv) / pt.hv -
                    n1 * (n1 - 1) * pt.norm2_grad_f(cv) / (pt.fv * pt.fv) -
                    n2 * (n2 - 1) * pt.norm2_grad_h(cv) / (pt.hv * pt.hv);
    return {{closed}, {pt.o_scalar(false)}};
}

// --------------------------------------------------------------------------
// Semi-symmetric connection components, P on the base (eq-1 .. eq-6)
// --------------------------------------------------------------------------

ValuePair pb_eq1(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vscale(pt.grad_f(cv), -pt.g_base(a.X, a.Y) / pt.fv);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pb_eq2(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = pt.fssmc_conn(a.X, a.Y, cv);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pb_eq3(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = vaxpy(vscale(pt.lift_fiber(a.V), pt.Xh(a.X) / pt.hv), pt.Vf(a.V) / pt.fv,
                       pt.lift_base(a.X));
    Vec oracle = pt.o_nabla(pt.lift_base(a.X), pt.lift_fiber(a.V), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pb_eq4(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vaxpy(vscale(pt.lift_fiber(a.V), pt.Xh(a.X) / pt.hv + pt.pi_base(a.X, cv)),
                       pt.Vf(a.V) / pt.fv, pt.lift_base(a.X));
    Vec oracle = pt.o_nabla(pt.lift_fiber(a.V), pt.lift_base(a.X), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pb_eq5(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double gvw = pt.g_fiber(a.V, a.W);
    Vec closed = vscale(pt.grad_h(cv), -gvw / pt.hv);
    closed = vaxpy(std::move(closed), -gvw, pt.Pv);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pb_eq6(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = conn_apply(pt.gammaF, a.V, a.W);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true));
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Semi-symmetric connection components, P on the fiber (eq-7 .. eq-12)
// --------------------------------------------------------------------------

ValuePair pf_eq7(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double gxy = pt.g_base(a.X, a.Y);
    Vec closed = vscale(pt.grad_f(cv), -gxy / pt.fv);
    closed = vaxpy(std::move(closed), -gxy, pt.Pv);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pf_eq8(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = conn_apply(pt.gammaB, a.X, a.Y);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_base(a.X), pt.lift_base(a.Y), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pf_eq9(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vscale(pt.lift_fiber(a.V), pt.Xh(a.X) / pt.hv);
    closed = vaxpy(std::move(closed), pt.Vf(a.V) / pt.fv + pt.pi_fiber(a.V, cv), pt.lift_base(a.X));
    Vec oracle = pt.o_nabla(pt.lift_base(a.X), pt.lift_fiber(a.V), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pf_eq10(const DwpPoint& pt, const ArgDraw& a, const Convention&, bool) {
    Vec closed = vaxpy(vscale(pt.lift_fiber(a.V), pt.Xh(a.X) / pt.hv), pt.Vf(a.V) / pt.fv,
                       pt.lift_base(a.X));
    Vec oracle = pt.o_nabla(pt.lift_fiber(a.V), pt.lift_base(a.X), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pf_eq11(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = vscale(pt.grad_h(cv), -pt.g_fiber(a.V, a.W) / pt.hv);
    Vec oracle = pt.base_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true));
    return {std::move(closed), std::move(oracle)};
}

ValuePair pf_eq12(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = pt.fssmc_conn(a.V, a.W, cv);
    Vec oracle = pt.fiber_block(pt.o_nabla(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true));
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Semi-symmetric curvature, P on the base
// --------------------------------------------------------------------------

ValuePair pbc_rxyz(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = pt.lift_base(pt.fssmc_curv(a.X, a.Y, a.Z, cv));
    double n2f = pt.norm2_grad_f(cv) / (pt.fv * pt.fv);
    closed = vaxpy(std::move(closed), n2f * pt.g_base(a.X, a.Z), pt.lift_base(a.Y));
    closed = vaxpy(std::move(closed), -n2f * pt.g_base(a.Y, a.Z), pt.lift_base(a.X));
    double c6 = pt.g_base(a.Y, a.Z) * pt.pi_base(a.X, cv) - pt.g_base(a.X, a.Z) * pt.pi_base(a.Y, cv);
    closed = vaxpy(std::move(closed), c6 / pt.fv, pt.lift_fiber(pt.grad_f(cv)));
    if (corrected) closed = vadd(std::move(closed), delta_rxyz(pt, a.X, a.Y, a.Z, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_base(a.Z), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pbc_rvxy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double hterm = pt.HhB(a.X, a.Y) / pt.hv;
    double gxy = pt.g_base(a.X, a.Y);
    double vf = pt.Vf(a.V) / pt.fv;
    // displayed: (+H/h + pi(X)pi(Y) - g(Y,nab_X P)) V + (Vf/f) pi(Y) X
    //            - ((Vf/f) P + (Ph/h) V + pi(P) V - (1/f) nabF grad f) g(X,Y)
    // corrected: both Levi-Civita-derived terms enter with the opposite sign
    // and the horizontal cross term is restored.
    double hsign = corrected ? -1.0 : 1.0;
    Vec closed = vscale(pt.lift_fiber(a.V),
                        hsign * hterm + pt.pi_base(a.X, cv) * pt.pi_base(a.Y, cv) -
                            pt.g_nablaP(a.Y, a.X) - gxy * (pt.Ph() / pt.hv + pt.pi_P(cv)));
    closed = vaxpy(std::move(closed), vf * pt.pi_base(a.Y, cv), pt.lift_base(a.X));
    closed = vaxpy(std::move(closed), -gxy * vf, pt.lift_base(pt.Pv));
    closed = vaxpy(std::move(closed), hsign * gxy / pt.fv,
                   pt.lift_fiber(pt.nablaF_gradf(a.V, cv)));
    if (corrected)
        closed = vaxpy(std::move(closed), -1.0, delta_rxvy(pt, a.X, a.V, a.Y, cv));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_base(a.X), pt.lift_base(a.Y), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pbc_rxyv(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double vf = pt.Vf(a.V) / pt.fv;
    Vec closed = vscale(pt.lift_base(a.X), vf * (pt.Xh(a.Y) / pt.hv + pt.pi_base(a.Y, cv)));
    closed = vaxpy(std::move(closed), -vf * (pt.Xh(a.X) / pt.hv + pt.pi_base(a.X, cv)),
                   pt.lift_base(a.Y));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_fiber(a.V), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pbc_rvwx(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double xh = pt.Xh(a.X) / pt.hv, pix = pt.pi_base(a.X, cv);
    Vec closed = vscale(pt.lift_fiber(a.V), pt.Vf(a.W) / pt.fv * xh - pt.Vf(a.W) / pt.fv * pix);
    closed = vaxpy(std::move(closed), -(pt.Vf(a.V) / pt.fv * xh - pt.Vf(a.V) / pt.fv * pix),
                   pt.lift_fiber(a.W));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_fiber(a.W), pt.lift_base(a.X), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pbc_rxvw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double gvw = pt.g_fiber(a.V, a.W);
    double pix = pt.pi_base(a.X, cv);
    Vec closed = vscale(pt.lift_base(a.X),
                        -pt.HfF(a.V, a.W) / pt.fv - gvw * (pt.Ph() / pt.hv + pt.pi_P(cv)));
    closed = vaxpy(std::move(closed), -pt.Vf(a.W) / pt.fv * pix, pt.lift_fiber(a.V));
    closed = vaxpy(std::move(closed), -gvw / pt.hv, pt.lift_base(pt.nablaB_gradh(a.X, cv)));
    closed = vaxpy(std::move(closed), -gvw, pt.lift_base(pt.nablaP_along(a.X)));
    closed = vaxpy(std::move(closed), gvw * pix, pt.lift_base(pt.Pv));
    closed = vaxpy(std::move(closed), gvw * pix / pt.fv, pt.lift_fiber(pt.grad_f(cv)));
    if (corrected) closed = vadd(std::move(closed), delta_rxvw(pt, a.X, a.V, a.W, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pbc_ruvw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = pt.lift_fiber(curv_apply(pt.RF, a.U, a.V, a.W));
    double guw = pt.g_fiber(a.U, a.W), gvw = pt.g_fiber(a.V, a.W);
    closed = vaxpy(std::move(closed), (pt.Vf(a.V) / pt.fv) * guw - (pt.Vf(a.U) / pt.fv) * gvw,
                   pt.lift_base(pt.Pv));
    double coef = pt.norm2_grad_h(cv) / (pt.hv * pt.hv) + 2.0 * pt.Ph() / pt.hv + pt.pi_P(cv);
    closed = vaxpy(std::move(closed), -coef * gvw, pt.lift_fiber(a.U));
    closed = vaxpy(std::move(closed), coef * guw, pt.lift_fiber(a.V));
    if (corrected) closed = vadd(std::move(closed), delta_ruvw(pt, a.U, a.V, a.W, cv));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.U), pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Semi-symmetric curvature, P on the fiber
// --------------------------------------------------------------------------

ValuePair pfc_rxyz(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    Vec closed = pt.lift_base(curv_apply(pt.RB, a.X, a.Y, a.Z));
    double c1 = pt.g_base(a.X, a.Z) * pt.Xh(a.Y) / pt.hv - pt.g_base(a.Y, a.Z) * pt.Xh(a.X) / pt.hv;
    closed = vaxpy(std::move(closed), c1, pt.lift_fiber(pt.Pv));
    closed = vaxpy(std::move(closed), -c1 / pt.fv, pt.lift_fiber(pt.grad_f(cv)));
    double coef = pt.norm2_grad_f(cv) / (pt.fv * pt.fv) + 2.0 * pt.Pf() / pt.fv + pt.pi_P(cv);
    closed = vaxpy(std::move(closed), coef * pt.g_base(a.X, a.Z), pt.lift_base(a.Y));
    closed = vaxpy(std::move(closed), -coef * pt.g_base(a.Y, a.Z), pt.lift_base(a.X));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_base(a.Z), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pfc_rvxy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double gxy = pt.g_base(a.X, a.Y);
    double piv = pt.pi_fiber(a.V, cv);
    Vec closed = vscale(pt.lift_fiber(a.V),
                        -(pt.HhB(a.X, a.Y) / pt.hv + gxy * (pt.Pf() / pt.fv + pt.pi_P(cv))));
    closed = vaxpy(std::move(closed), -pt.Xh(a.Y) / pt.hv * piv, pt.lift_base(a.X));
    closed = vaxpy(std::move(closed), gxy * piv / pt.hv, pt.lift_base(pt.grad_h(cv)));
    closed = vaxpy(std::move(closed), gxy * piv, pt.lift_fiber(pt.Pv));
    closed = vaxpy(std::move(closed), -gxy, pt.lift_fiber(pt.nablaP_along(a.V)));
    closed = vaxpy(std::move(closed), -gxy / pt.fv, pt.lift_fiber(pt.nablaF_gradf(a.V, cv)));
    if (corrected)
        closed = vaxpy(std::move(closed), -1.0, delta_rxvy(pt, a.X, a.V, a.Y, cv));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_base(a.X), pt.lift_base(a.Y), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pfc_rxyv(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double vf = pt.Vf(a.V) / pt.fv, piv = pt.pi_fiber(a.V, cv);
    Vec closed = vscale(pt.lift_base(a.X), vf * pt.Xh(a.Y) / pt.hv - pt.Xh(a.Y) / pt.hv * piv);
    closed = vaxpy(std::move(closed), -(vf * pt.Xh(a.X) / pt.hv - pt.Xh(a.X) / pt.hv * piv),
                   pt.lift_base(a.Y));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_base(a.Y), pt.lift_fiber(a.V), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pfc_rvwx(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double xh = pt.Xh(a.X) / pt.hv;
    Vec closed = vscale(pt.lift_fiber(a.V), pt.Vf(a.W) / pt.fv * xh + xh * pt.pi_fiber(a.W, cv));
    closed = vaxpy(std::move(closed), -(pt.Vf(a.V) / pt.fv * xh + xh * pt.pi_fiber(a.V, cv)),
                   pt.lift_fiber(a.W));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.V), pt.lift_fiber(a.W), pt.lift_base(a.X), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pfc_rxvw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double gvw = pt.g_fiber(a.V, a.W);
    double xh = pt.Xh(a.X) / pt.hv;
    Vec closed = vscale(pt.lift_base(a.X),
                        -gvw * (pt.Pf() / pt.fv + pt.pi_P(cv)) -
                            (pt.HfF(a.V, a.W) / pt.fv - pt.pi_fiber(a.V, cv) * pt.pi_fiber(a.W, cv) +
                             pt.g_nablaP(a.W, a.V)));
    closed = vaxpy(std::move(closed), -gvw / pt.hv, pt.lift_base(pt.nablaB_gradh(a.X, cv)));
    closed = vaxpy(std::move(closed), -gvw * xh, pt.lift_fiber(pt.Pv));
    closed = vaxpy(std::move(closed), xh * pt.pi_fiber(a.W, cv), pt.lift_fiber(a.V));
    if (corrected) closed = vadd(std::move(closed), delta_rxvw(pt, a.X, a.V, a.W, cv));
    Vec oracle = pt.o_riemann(pt.lift_base(a.X), pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {std::move(closed), std::move(oracle)};
}

ValuePair pfc_ruvw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    Vec closed = pt.lift_fiber(pt.fssmc_curv(a.U, a.V, a.W, cv));
    double n2h = pt.norm2_grad_h(cv) / (pt.hv * pt.hv);
    double guw = pt.g_fiber(a.U, a.W), gvw = pt.g_fiber(a.V, a.W);
    closed = vaxpy(std::move(closed), -n2h * gvw, pt.lift_fiber(a.U));
    closed = vaxpy(std::move(closed), n2h * guw, pt.lift_fiber(a.V));
    double c3 = pt.pi_fiber(a.U, cv) * gvw - guw * pt.pi_fiber(a.V, cv);
    closed = vaxpy(std::move(closed), c3 / pt.hv, pt.lift_base(pt.grad_h(cv)));
    if (corrected) closed = vadd(std::move(closed), delta_ruvw(pt, a.U, a.V, a.W, cv));
    Vec oracle = pt.o_riemann(pt.lift_fiber(a.U), pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {std::move(closed), std::move(oracle)};
}

// --------------------------------------------------------------------------
// Semi-symmetric Ricci corollaries
// --------------------------------------------------------------------------

ValuePair pbr_sxy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2();
    double closed = pt.fssmc_ricci(a.X, a.Y, cv) - (n2 / pt.hv) * pt.HhB(a.X, a.Y) +
                    n2 * pt.pi_base(a.X, cv) * pt.pi_base(a.Y, cv) - n2 * pt.g_nablaP(a.Y, a.X) -
                    pt.g_base(a.X, a.Y) *
                        ((n1 - 1) * pt.norm2_grad_f(cv) / (pt.fv * pt.fv) + n2 * pt.pi_P(cv) +
                         n2 * pt.Ph() / pt.hv + pt.lap_f(cv) / pt.fv);
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_base(a.Y), true);
    return {{closed}, {oracle}};
}

ValuePair pbr_sxv(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double coef = corrected ? pt.n() - 2 : pt.n1() - 1;
    double closed = coef * pt.Vf(a.V) * pt.Xh(a.X) / (pt.hv * pt.fv) +
                    (pt.n() - 2) * pt.Vf(a.V) / pt.fv * pt.pi_base(a.X, cv);
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_fiber(a.V), true);
    return {{closed}, {oracle}};
}

ValuePair pbr_svx(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double coef = corrected ? pt.n() - 2 : pt.n2() - 1;
    double closed = coef * pt.Vf(a.V) * pt.Xh(a.X) / (pt.hv * pt.fv) -
                    (pt.n() - 2) * pt.Vf(a.V) / pt.fv * pt.pi_base(a.X, cv);
    double oracle = pt.o_ricci(pt.lift_fiber(a.V), pt.lift_base(a.X), true);
    return {{closed}, {oracle}};
}

ValuePair pbr_svw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2();
    double gvw = pt.g_fiber(a.V, a.W);
    double closed = bilinear(pt.SF, a.V, a.W) - (n1 / pt.fv) * pt.HfF(a.V, a.W) -
                    gvw * (pt.div_P(cv) + pt.lap_h(cv) / pt.hv + n1 * pt.Ph() / pt.hv +
                           (n1 - 1) * pt.pi_P(cv)) -
                    (n2 - 1) *
                        (pt.norm2_grad_h(cv) / (pt.hv * pt.hv) + 2.0 * pt.Ph() / pt.hv +
                         pt.pi_P(cv)) *
                        gvw;
    double oracle = pt.o_ricci(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {{closed}, {oracle}};
}

ValuePair pfr_sxy(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2();
    double gxy = pt.g_base(a.X, a.Y);
    double closed = bilinear(pt.SB, a.X, a.Y) - (n2 / pt.hv) * pt.HhB(a.X, a.Y) -
                    (n1 - 1) *
                        (pt.norm2_grad_f(cv) / (pt.fv * pt.fv) + 2.0 * pt.Pf() / pt.fv) * gxy -
                    gxy * (pt.lap_f(cv) / pt.fv + (pt.n() - 2) * pt.pi_P(cv) +
                           n2 * pt.Pf() / pt.fv + pt.div_P(cv));
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_base(a.Y), true);
    return {{closed}, {oracle}};
}

ValuePair pfr_sxv(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool corrected) {
    double coef = corrected ? pt.n() - 2 : pt.n1() - 1;
    double closed = coef * pt.Vf(a.V) * pt.Xh(a.X) / (pt.hv * pt.fv) -
                    (pt.n() - 2) * pt.Xh(a.X) / pt.hv * pt.pi_fiber(a.V, cv);
    double oracle = pt.o_ricci(pt.lift_base(a.X), pt.lift_fiber(a.V), true);
    return {{closed}, {oracle}};
}

ValuePair pfr_svw(const DwpPoint& pt, const ArgDraw& a, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2();
    double gvw = pt.g_fiber(a.V, a.W);
    double closed = pt.fssmc_ricci(a.V, a.W, cv) - n1 * pt.g_nablaP(a.W, a.V) -
                    (n1 / pt.fv) * pt.HfF(a.V, a.W) +
                    n1 * pt.pi_fiber(a.V, cv) * pt.pi_fiber(a.W, cv) -
                    gvw * (pt.lap_h(cv) / pt.hv + n1 * pt.Pf() / pt.fv +
                           (n2 - 1) * pt.norm2_grad_h(cv) / (pt.hv * pt.hv) + n1 * pt.pi_P(cv));
    double oracle = pt.o_ricci(pt.lift_fiber(a.V), pt.lift_fiber(a.W), true);
    return {{closed}, {oracle}};
}

// --------------------------------------------------------------------------
// Semi-symmetric scalar curvature corollaries
// --------------------------------------------------------------------------

ValuePair pbs_r(const DwpPoint& pt, const ArgDraw&, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2(), n = pt.n();
    // The base term reads "r~_B / f^2": under the induced reading the scaled
    // trace already carries the 1/f^2, under the factor reading it is literal.
    double brt = cv.ambient_pi ? pt.fssmc_scalar(cv) : pt.fssmc_scalar(cv) / (pt.fv * pt.fv);
    double closed = brt + pt.rF / (pt.hv * pt.hv) -
                    n1 * (n1 - 1) * pt.norm2_grad_f(cv) / (pt.fv * pt.fv) -
                    n2 * (n2 - 1) * pt.norm2_grad_h(cv) / (pt.hv * pt.hv) -
                    2.0 * n2 * (n - 1) * pt.Ph() / pt.hv - 2.0 * n1 * pt.lap_f(cv) / pt.fv -
                    2.0 * n2 * pt.lap_h(cv) / pt.hv - 2.0 * n2 * pt.div_P(cv) -
                    n2 * (n + n1 - 3) * pt.pi_P(cv);
    return {{closed}, {pt.o_scalar(true)}};
}

ValuePair pfs_r(const DwpPoint& pt, const ArgDraw&, const Convention& cv, bool) {
    double n1 = pt.n1(), n2 = pt.n2(), n = pt.n();
    double frt = cv.ambient_pi ? pt.fssmc_scalar(cv) : pt.fssmc_scalar(cv) / (pt.hv * pt.hv);
    double closed = pt.rB / (pt.fv * pt.fv) + frt -
                    n1 * (n1 - 1) * pt.norm2_grad_f(cv) / (pt.fv * pt.fv) -
                    n2 * (n2 - 1) * pt.norm2_grad_h(cv) / (pt.hv * pt.hv) -
                    2.0 * n1 * (n - 1) * pt.Pf() / pt.fv - 2.0 * n1 * pt.lap_f(cv) / pt.fv -
                    2.0 * n2 * pt.lap_h(cv) / pt.hv - 2.0 * n1 * pt.div_P(cv) -
                    n1 * (n + n2 - 3) * pt.pi_P(cv);
    return {{closed}, {pt.o_scalar(true)}};
}

}  // namespace

const std::vector<IdentityDef>& identity_registry() {
    static const std::vector<IdentityDef> registry = [] {
        std::vector<IdentityDef> r;
        const double tol = 1e-6;
        auto add = [&](std::string key, std::string stmt, PSide side, bool errata,
                       std::string note, ValuePair (*fn)(const DwpPoint&, const ArgDraw&,
                                                         const Convention&, bool)) {
            r.push_back({std::move(key), std::move(stmt), side, tol, errata, std::move(note), fn});
        };

        // Levi-Civita connection
        add("lemma1.tanXY", "tan nab_X Y = -(grad f / f) g(X,Y)", PSide::None, false, "", l1_tan_xy);
        add("lemma1.norXY", "nor nab_X Y = lift of base nab_X Y", PSide::None, false, "", l1_nor_xy);
        add("lemma1.mixedXV", "nab_X V = nab_V X = (Xh/h)V + (Vf/f)X", PSide::None, false, "", l1_mixed_xv);
        add("lemma1.norVW", "nor nab_V W = -(grad h / h) g(V,W)", PSide::None, false, "", l1_nor_vw);
        add("lemma1.tanVW", "tan nab_V W = lift of fiber nab_V W", PSide::None, false, "", l1_tan_vw);

        // Levi-Civita curvature
        add("lemma2.RXYZ", "R(X,Y)Z = R_B(X,Y)Z + |grad f|^2/f^2 (g(X,Z)Y - g(Y,Z)X)", PSide::None,
            true, "display omits the ((Xh)g(Y,Z)-(Yh)g(X,Z)) grad f /(fh) cross term", l2_rxyz);
        add("lemma2.RXVY", "R(X,V)Y = (H_B^h(X,Y)/h)V + (g(X,Y)/f) nabF_V grad f", PSide::None,
            true, "display omits the (Vf/f)((Yh/h)X - g(X,Y) grad h / h) cross term", l2_rxvy);
        add("lemma2.RXYV", "R(X,Y)V = (Vf/f)((Yh/h)X - (Xh/h)Y)", PSide::None, false, "", l2_rxyv);
        add("lemma2.RXVW", "R(X,V)W = -(H_F^f(V,W)/f)X - (g(V,W)/h) nabB_X grad h", PSide::None,
            true, "display omits the (Xh/h)(g(V,W) grad f / f - (Wf/f)V) cross term", l2_rxvw);
        add("lemma2.RVWX", "R(V,W)X = (Xh/h)((Wf/f)V - (Vf/f)W)", PSide::None, false, "", l2_rvwx);
        add("lemma2.RVWU", "R(V,W)U = R_F(V,W)U + |grad h|^2/h^2 (g(V,U)W - g(W,U)V)", PSide::None,
            true, "display omits the ((Vf)g(W,U)-(Wf)g(V,U)) grad h /(hf) cross term", l2_rvwu);

        // Levi-Civita Ricci + scalar
        add("lemma3.SXY", "S(X,Y) = S_B - (n2/h)H_B^h - ((n1-1)|grad f|^2/f^2 + lap f / f) g",
            PSide::None, false, "", l3_sxy);
        add("lemma3.SXV", "S(X,V) = (n-2)(Xh)(Vf)/(hf)", PSide::None, false, "", l3_sxv);
        add("lemma3.SVW", "S(V,W) = S_F - (n1/f)H_F^f - ((n2-1)|grad h|^2/h^2 + lap h / h) g",
            PSide::None, false, "", l3_svw);
        add("lemma4.scalar",
            "r = r_B/f^2 + r_F/h^2 - 2 n1 lap f / f - 2 n2 lap h / h - n1(n1-1)|grad f|^2/f^2 - n2(n2-1)|grad h|^2/h^2",
            PSide::None, false, "", l4_scalar);

        // connection components, P on the base
        add("prop-ssmc-conn-PB.eq-1", "tan nab~_X Y = -(1/f) g(X,Y) grad f", PSide::Base, false, "", pb_eq1);
        add("prop-ssmc-conn-PB.eq-2", "nor nab~_X Y = lift of base nab~_X Y", PSide::Base, false, "", pb_eq2);
        add("prop-ssmc-conn-PB.eq-3", "nab~_X V = (Xh/h)V + (Vf/f)X", PSide::Base, false, "", pb_eq3);
        add("prop-ssmc-conn-PB.eq-4", "nab~_V X = (Xh/h)V + (Vf/f)X + pi(X)V", PSide::Base, false, "", pb_eq4);
        add("prop-ssmc-conn-PB.eq-5", "nor nab~_V W = -(grad h / h + P) g(V,W)", PSide::Base, false, "", pb_eq5);
        add("prop-ssmc-conn-PB.eq-6", "tan nab~_V W = lift of fiber nab~_V W", PSide::Base, false, "", pb_eq6);

        // connection components, P on the fiber
        add("prop-ssmc-conn-PF.eq-7", "tan nab~_X Y = -(grad f / f + P) g(X,Y)", PSide::Fiber, false, "", pf_eq7);
        add("prop-ssmc-conn-PF.eq-8", "nor nab~_X Y = lift of base nab~_X Y", PSide::Fiber, false, "", pf_eq8);
        add("prop-ssmc-conn-PF.eq-9", "nab~_X V = (Xh/h)V + (Vf/f)X + pi(V)X", PSide::Fiber, false, "", pf_eq9);
        add("prop-ssmc-conn-PF.eq-10", "nab~_V X = (Xh/h)V + (Vf/f)X", PSide::Fiber, false, "", pf_eq10);
        add("prop-ssmc-conn-PF.eq-11", "nor nab~_V W = -(grad h / h) g(V,W)", PSide::Fiber, false, "", pf_eq11);
        add("prop-ssmc-conn-PF.eq-12", "tan nab~_V W = lift of fiber nab~_V W", PSide::Fiber, false, "", pf_eq12);

        // curvature, P on the base
        add("prop-ssmc-curv-PB.RXYZ",
            "R~(X,Y)Z = R~_B + |grad f|^2/f^2 (g(X,Z)Y - g(Y,Z)X) + (g(Y,Z)pi(X) - g(X,Z)pi(Y)) grad f / f",
            PSide::Base, true, "display omits the doubly-warped grad f cross term", pbc_rxyz);
        add("prop-ssmc-curv-PB.RVXY",
            "R~(V,X)Y = (H_B^h/h + pi(X)pi(Y) - g(Y,nabB_X P))V + (Vf/f)pi(Y)X - (...) g(X,Y)",
            PSide::Base, true,
            "Levi-Civita terms enter as R(V,X)Y = -R(X,V)Y: the H and nabF grad f terms need the opposite sign; grad h cross term omitted",
            pbc_rvxy);
        add("prop-ssmc-curv-PB.RXYV",
            "R~(X,Y)V = ((Vf)(Yh)/(hf) + (Vf/f)pi(Y))X - ((Vf)(Xh)/(hf) + (Vf/f)pi(X))Y",
            PSide::Base, false, "", pbc_rxyv);
        add("prop-ssmc-curv-PB.RVWX",
            "R~(V,W)X = ((Wf)(Xh)/(hf) - (Wf/f)pi(X))V - ((Vf)(Xh)/(hf) - (Vf/f)pi(X))W",
            PSide::Base, false, "", pbc_rvwx);
        add("prop-ssmc-curv-PB.RXVW",
            "R~(X,V)W = -(H_F^f/f)X - (Wf/f)pi(X)V - g(V,W)(nabB_X grad h / h + (Ph/h)X + nabB_X P + pi(P)X - pi(X)P - pi(X) grad f / f)",
            PSide::Base, true, "display omits the doubly-warped grad f cross term", pbc_rxvw);
        add("prop-ssmc-curv-PB.RUVW",
            "R~(U,V)W = R_F(U,V)W - (Uf/f)g(V,W)P + (Vf/f)g(U,W)P - (|grad h|^2/h^2 + 2Ph/h + pi(P))(g(V,W)U - g(U,W)V)",
            PSide::Base, true, "display omits the doubly-warped grad h cross term", pbc_ruvw);

        // curvature, P on the fiber
        add("prop-ssmc-curv-PF.RXYZ",
            "R~(X,Y)Z = R_B(X,Y)Z + (g(X,Z)Yh/h - g(Y,Z)Xh/h)(P - grad f / f) + (|grad f|^2/f^2 + 2Pf/f + pi(P))(g(X,Z)Y - g(Y,Z)X)",
            PSide::Fiber, false, "", pfc_rxyz);
        add("prop-ssmc-curv-PF.RVXY",
            "R~(V,X)Y = -(H_B^h/h + (Pf/f)g + pi(P)g)V - (Yh/h)pi(V)X + g(X,Y)(pi(V)grad h/h + pi(V)P - nabF_V P - nabF_V grad f / f)",
            PSide::Fiber, true, "display omits the doubly-warped grad h cross term", pfc_rvxy);
        add("prop-ssmc-curv-PF.RXYV",
            "R~(X,Y)V = ((Vf)(Yh)/(hf) - (Yh/h)pi(V))X - ((Vf)(Xh)/(hf) - (Xh/h)pi(V))Y",
            PSide::Fiber, false, "", pfc_rxyv);
        add("prop-ssmc-curv-PF.RVWX",
            "R~(V,W)X = ((Wf)(Xh)/(hf) + (Xh/h)pi(W))V - ((Vf)(Xh)/(hf) + (Xh/h)pi(V))W",
            PSide::Fiber, false, "", pfc_rvwx);
        add("prop-ssmc-curv-PF.RXVW",
            "R~(X,V)W = -g(V,W)(nabB_X grad h / h + (Pf/f)X + pi(P)X + (Xh/h)P) - (H_F^f/f - pi(V)pi(W) + g(W,nabF_V P))X + (Xh/h)pi(W)V",
            PSide::Fiber, true, "display omits the doubly-warped grad f cross term", pfc_rxvw);
        add("prop-ssmc-curv-PF.RUVW",
            "R~(U,V)W = R~_F(U,V)W - |grad h|^2/h^2 (g(V,W)U - g(U,W)V) + (pi(U)g(V,W) - g(U,W)pi(V)) grad h / h",
            PSide::Fiber, true, "display omits the doubly-warped grad h cross term", pfc_ruvw);

        // Ricci corollaries
        add("cor-ricci-PB.SXY",
            "S~(X,Y) = S~_B - (n2/h)H_B^h + n2 pi(X)pi(Y) - n2 g(Y,nabB_X P) - ((n1-1)|grad f|^2/f^2 + n2 pi(P) + n2 Ph/h + lap f / f) g",
            PSide::Base, false, "", pbr_sxy);
        add("cor-ricci-PB.SXV", "S~(X,V) = (n1-1)(Vf)(Xh)/(hf) + (n-2)(Vf/f)pi(X)", PSide::Base,
            true, "oracle confirms the (Vf)(Xh) coefficient is (n-2), matching the Levi-Civita mixed Ricci at P=0",
            pbr_sxv);
        add("cor-ricci-PB.SVX", "S~(V,X) = (n2-1)(Vf)(Xh)/(hf) - (n-2)(Vf/f)pi(X)", PSide::Base,
            true, "oracle confirms the (Vf)(Xh) coefficient is (n-2), matching the Levi-Civita mixed Ricci at P=0",
            pbr_svx);
        add("cor-ricci-PB.SVW",
            "S~(V,W) = S_F - (n1/f)H_F^f - (div P + lap h / h + n1 Ph/h + (n1-1)pi(P)) g - (n2-1)(|grad h|^2/h^2 + 2Ph/h + pi(P)) g",
            PSide::Base, false, "", pbr_svw);
        add("cor-ricci-PF.SXY",
            "S~(X,Y) = S_B - (n2/h)H_B^h - (n1-1)(|grad f|^2/f^2 + 2Pf/f) g - (lap f / f + (n-2)pi(P) + n2 Pf/f + div P) g",
            PSide::Fiber, false, "", pfr_sxy);
        add("cor-ricci-PF.SXV", "S~(X,V) = (n1-1)(Vf)(Xh)/(hf) - (n-2)(Xh/h)pi(V)", PSide::Fiber,
            true, "oracle confirms the (Vf)(Xh) coefficient is (n-2), matching the Levi-Civita mixed Ricci at P=0",
            pfr_sxv);
        add("cor-ricci-PF.SVW",
            "S~(V,W) = S~_F - n1 g(W,nabF_V P) - (n1/f)H_F^f + n1 pi(V)pi(W) - (lap h / h + n1 Pf/f + (n2-1)|grad h|^2/h^2 + n1 pi(P)) g",
            PSide::Fiber, false, "", pfr_svw);

        // scalar corollaries
        add("cor-scalar-PB.r",
            "r~ = r~_B/f^2 + r_F/h^2 - n1(n1-1)|grad f|^2/f^2 - n2(n2-1)|grad h|^2/h^2 - 2n2(n-1)Ph/h - 2n1 lap f / f - 2n2 lap h / h - 2n2 div P - n2(n+n1-3)pi(P)",
            PSide::Base, false, "", pbs_r);
        add("cor-scalar-PF.r",
            "r~ = r_B/f^2 + r~_F/h^2 - n1(n1-1)|grad f|^2/f^2 - n2(n2-1)|grad h|^2/h^2 - 2n1(n-1)Pf/f - 2n1 lap f / f - 2n2 lap h / h - 2n1 div P - n1(n+n2-3)pi(P)",
            PSide::Fiber, false, "", pfs_r);

        return r;
    }();
    return registry;
}

const IdentityDef* find_identity(const std::string& key) {
    for (const auto& d : identity_registry())
        if (d.key == key) return &d;
    return nullptr;
}

}  // namespace dwpc
