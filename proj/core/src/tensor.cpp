#include "dwpc/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace dwpc {

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix invert(const Matrix& m) {
    const int n = m.n;
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == 0.0) throw SingularMatrixError("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        double d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Vec sym_eigenvalues(const Matrix& m) {
    const int n = m.n;
    Matrix a = m;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    Vec ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double sym_condition(const Matrix& m) {
    Vec ev = sym_eigenvalues(m);
    double lo = 1e300, hi = 0.0;
    for (double v : ev) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    if (lo == 0.0) return 1e300;
    return hi / lo;
}

Vec mat_vec(const Matrix& m, std::span<const double> v) {
    Vec r(static_cast<std::size_t>(m.n), 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

double bilinear(const Matrix& m, std::span<const double> u, std::span<const double> v) {
    double r = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r += u[static_cast<std::size_t>(i)] * m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

TensorValue::TensorValue(int dim, std::vector<Variance> variance)
    : dim_(dim), variance_(std::move(variance)) {
    std::size_t sz = 1;
    for (std::size_t k = 0; k < variance_.size(); ++k) sz *= static_cast<std::size_t>(dim_);
    data_.assign(sz, 0.0);
}

TensorValue TensorValue::scalar(double v) {
    TensorValue t;
    t.dim_ = 1;
    t.data_.assign(1, v);
    return t;
}

std::size_t TensorValue::offset(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw ShapeError("index rank mismatch");
    std::size_t off = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) throw ShapeError("index out of range");
        off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return off;
}

TensorValue contract(const TensorValue& t, int slot_up, int slot_down) {
    const int r = t.rank();
    if (slot_up < 0 || slot_up >= r || slot_down < 0 || slot_down >= r || slot_up == slot_down)
        throw ShapeError("contract: slot out of range");
    if (t.variance()[static_cast<std::size_t>(slot_up)] != Variance::Up ||
        t.variance()[static_cast<std::size_t>(slot_down)] != Variance::Down)
        throw ShapeError("contract: slots must pair one up with one down index");

    const int n = t.dim();
    std::vector<Variance> out_var;
    for (int s = 0; s < r; ++s)
        if (s != slot_up && s != slot_down) out_var.push_back(t.variance()[static_cast<std::size_t>(s)]);
    TensorValue out = out_var.empty() ? TensorValue::scalar(0.0) : TensorValue(n, out_var);

    // strides of the input
    std::vector<std::size_t> stride(static_cast<std::size_t>(r), 1);
    for (int s = r - 2; s >= 0; --s)
        stride[static_cast<std::size_t>(s)] = stride[static_cast<std::size_t>(s + 1)] * static_cast<std::size_t>(n);

    const std::size_t out_sz = out.size();
    std::vector<int> out_idx(static_cast<std::size_t>(r > 2 ? r - 2 : 0), 0);
    for (std::size_t o = 0; o < out_sz; ++o) {
        // decode output index
        std::size_t rem = o;
        for (int s = static_cast<int>(out_idx.size()) - 1; s >= 0; --s) {
            out_idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
        }
        std::size_t base = 0;
        int k = 0;
        for (int s = 0; s < r; ++s) {
            if (s == slot_up || s == slot_down) continue;
            base += stride[static_cast<std::size_t>(s)] * static_cast<std::size_t>(out_idx[static_cast<std::size_t>(k++)]);
        }
        double sum = 0.0;
        for (int m = 0; m < n; ++m)
            sum += t.data()[base + stride[static_cast<std::size_t>(slot_up)] * static_cast<std::size_t>(m) +
                            stride[static_cast<std::size_t>(slot_down)] * static_cast<std::size_t>(m)];
        out.data()[o] = sum;
    }
    return out;
}

TensorValue raise_lower(const TensorValue& t, int slot, const Matrix& g, Variance target) {
    const int r = t.rank();
    if (slot < 0 || slot >= r) throw ShapeError("raise_lower: slot out of range");
    if (g.n != t.dim()) throw ShapeError("raise_lower: metric dimension mismatch");
    if (sym_condition(g) > 1e12)
        throw SingularMatrixError("metric condition number exceeds 1e12");

    if (t.variance()[static_cast<std::size_t>(slot)] == target) return t;
    const Matrix m = target == Variance::Up ? invert(g) : g;

    const int n = t.dim();
    std::vector<Variance> var = t.variance();
    var[static_cast<std::size_t>(slot)] = target;
    TensorValue out(n, var);

    std::vector<std::size_t> stride(static_cast<std::size_t>(r), 1);
    for (int s = r - 2; s >= 0; --s)
        stride[static_cast<std::size_t>(s)] = stride[static_cast<std::size_t>(s + 1)] * static_cast<std::size_t>(n);

    const std::size_t sz = out.size();
    for (std::size_t o = 0; o < sz; ++o) {
        std::size_t slot_i = (o / stride[static_cast<std::size_t>(slot)]) % static_cast<std::size_t>(n);
        std::size_t base = o - slot_i * stride[static_cast<std::size_t>(slot)];
        double sum = 0.0;
        for (int m2 = 0; m2 < n; ++m2)
            sum += m(static_cast<int>(slot_i), m2) *
                   t.data()[base + static_cast<std::size_t>(m2) * stride[static_cast<std::size_t>(slot)]];
        out.data()[o] = sum;
    }
    return out;
}

double max_abs_diff(const TensorValue& a, const TensorValue& b) {
    if (a.dim() != b.dim() || a.rank() != b.rank() || a.variance() != b.variance())
        throw ShapeError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace dwpc
