#ifndef DWPC_TENSOR_HPP
#define DWPC_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace dwpc {

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<double>;

/// Dense n x n matrix, row-major.
struct Matrix {
    int n = 0;
    Vec a;

    Matrix() = default;
    explicit Matrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Matrix identity(int dim);
};

/// Gauss-Jordan inverse with partial pivoting; throws SingularMatrixError.
Matrix invert(const Matrix& m);

/// Eigenvalues of a symmetric matrix (cyclic Jacobi), ascending order.
Vec sym_eigenvalues(const Matrix& m);

/// |lambda|_max / |lambda|_min of a symmetric matrix.
double sym_condition(const Matrix& m);

Vec mat_vec(const Matrix& m, std::span<const double> v);
double bilinear(const Matrix& m, std::span<const double> u, std::span<const double> v);

enum class Variance : std::uint8_t { Up, Down };

/// Dense pointwise tensor over one chart: every slot has the chart dimension,
/// each slot carries an up/down variance tag. Row-major layout.
class TensorValue {
public:
    TensorValue() = default;
    TensorValue(int dim, std::vector<Variance> variance);
    static TensorValue scalar(double v);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(variance_.size()); }
    const std::vector<Variance>& variance() const { return variance_; }

    double& operator()(std::initializer_list<int> idx) { return data_[offset(idx)]; }
    double operator()(std::initializer_list<int> idx) const { return data_[offset(idx)]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    std::size_t size() const { return data_.size(); }

private:
    std::size_t offset(std::initializer_list<int> idx) const;
    int dim_ = 0;
    std::vector<Variance> variance_;
    Vec data_;
};

/// Einstein contraction of one up slot against one down slot.
TensorValue contract(const TensorValue& t, int slot_up, int slot_down);

/// Flip one slot's variance by contracting with the metric (Down target) or
/// its inverse (Up target). Throws SingularMatrixError when the metric's
/// condition number exceeds 1e12.
TensorValue raise_lower(const TensorValue& t, int slot, const Matrix& g, Variance target);

/// max_ij... |a - b|; shapes and variances must agree.
double max_abs_diff(const TensorValue& a, const TensorValue& b);

}  // namespace dwpc

#endif
