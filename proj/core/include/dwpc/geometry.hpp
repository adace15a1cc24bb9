#ifndef DWPC_GEOMETRY_HPP
#define DWPC_GEOMETRY_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dwpc/expr.hpp"
#include "dwpc/tensor.hpp"

namespace dwpc {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Open sampling box, one interval per coordinate.
struct Box {
    std::vector<std::array<double, 2>> ranges;
    int dim() const { return static_cast<int>(ranges.size()); }
    Vec center() const;
    bool contains(std::span<const double> p) const;
};

/// Chart with symbolic metric components. Off-diagonal entries share Expr
/// nodes across (i,j)/(j,i) so symmetry is exact by construction.
struct ChartManifold {
    std::vector<std::string> coords;
    std::vector<Expr> metric;  // n*n row-major
    Box box;

    int dim() const { return static_cast<int>(coords.size()); }
    const Expr& g(int i, int j) const { return metric[static_cast<std::size_t>(i) * coords.size() + j]; }
    Expr& g(int i, int j) { return metric[static_cast<std::size_t>(i) * coords.size() + j]; }

    static ChartManifold make(std::vector<std::string> coords,
                              std::vector<std::vector<Expr>> g,
                              Box box);
    static ChartManifold euclidean(std::vector<std::string> coords, Box box);
};

/// Contravariant vector field, one component expression per coordinate.
struct VectorFieldSpec {
    std::vector<Expr> components;
    static VectorFieldSpec zero(int n);
    bool is_zero() const;
};

enum class ConnectionKind { LeviCivita, SemiSymmetric };

/// Affine connection with coefficients held as expressions, so curvature is
/// obtained by exact symbolic differentiation (no finite differences).
class ConnectionField {
public:
    ConnectionField() = default;
    ConnectionField(int n, ConnectionKind kind, std::vector<Expr> gamma);

    int dim() const { return n_; }
    ConnectionKind kind() const { return kind_; }
    const Expr& gamma(int k, int i, int j) const;

    TensorValue coeffs_at(std::span<const double> p) const;   // rank 3, up/down/down
    TensorValue torsion_at(std::span<const double> p) const;  // T^k_ij = G^k_ij - G^k_ji

    /// R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik,
    /// realizing R(X,Y)Z = nab_X nab_Y Z - nab_Y nab_X Z - nab_[X,Y] Z.
    const std::vector<Expr>& riemann() const;
    /// S_jk = R^i_ijk (first up slot against first down slot).
    const std::vector<Expr>& ricci() const;
    /// (nab_i S)_jk = d_i S_jk - G^m_ij S_mk - G^m_ik S_jm, same connection.
    const std::vector<Expr>& nabla_ricci() const;

    TensorValue riemann_at(std::span<const double> p) const;
    TensorValue ricci_at(std::span<const double> p) const;
    TensorValue nabla_ricci_at(std::span<const double> p) const;
    double scalar_at(std::span<const double> p, const Matrix& ginv) const;

    /// Builds the lazy symbolic stacks now (call before sharing across threads).
    void ensure_built() const;

private:
    int n_ = 0;
    ConnectionKind kind_ = ConnectionKind::LeviCivita;
    std::vector<Expr> gamma_;
    mutable std::vector<Expr> riemann_, ricci_, nabla_ricci_;
};

struct GradHess {
    Vec grad;        // contravariant components
    Matrix hess;     // H_ij = d_i d_j phi - G^m_ij d_m phi (Levi-Civita)
    double laplace;  // g^ij H_ij
};

/// Symbolic geometry oracle for one chart: metric inverse by adjugate/detenant,
/// Levi-Civita connection, and semi-symmetric metric connections built from it.
class ManifoldGeometry {
public:
    explicit ManifoldGeometry(ChartManifold chart);

    const ChartManifold& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }

    const std::vector<Expr>& metric_inverse() const { return ginv_; }
    const Expr& ginv(int i, int j) const { return ginv_[static_cast<std::size_t>(i) * dim() + j]; }

    Matrix metric_at(std::span<const double> p) const;
    Matrix metric_inverse_at(std::span<const double> p) const;

    /// Throws ConfigError unless the metric is symmetric positive definite
    /// (all eigenvalues > 1e-10) at every supplied point.
    void validate_at(const std::vector<Vec>& points) const;

    const ConnectionField& levi_civita() const { return lc_; }

    /// G~^k_ij = G^k_ij + delta^k_i pi_j - g_ij P^k with pi_j = g_jl P^l.
    ConnectionField make_ssmc(const VectorFieldSpec& P) const;

    GradHess grad_hess_laplace(const Expr& phi, std::span<const double> p) const;

private:
    ChartManifold chart_;
    std::vector<Expr> ginv_;
    ConnectionField lc_;
};

/// Symbolic determinant by Laplace expansion (zero-entry terms are dropped by
/// expression folding, so block/diagonal metrics stay compact).
Expr symbolic_det(const std::vector<Expr>& m, int n);
std::vector<Expr> symbolic_inverse(const std::vector<Expr>& m, int n);

/// Assembles the curvature of the semi-symmetric connection from Levi-Civita
/// data:
///   R~(X,Y)Z = R(X,Y)Z + g(Z,nab_X P)Y - g(Z,nab_Y P)X
///            + g(X,Z) nab_Y P - g(Y,Z) nab_X P
///            + pi(P)(g(X,Z)Y - g(Y,Z)X)
///            + (g(Y,Z)pi(X) - g(X,Z)pi(Y))P + pi(Z)(pi(Y)X - pi(X)Y).
/// Inputs are pointwise values; nabla_p(i,k) = (nab_i P)^k.
TensorValue ssmc_curvature_from_relation(const TensorValue& riemann_lc, const Matrix& g,
                                         const Matrix& nabla_p, std::span<const double> p_vec);

}  // namespace dwpc

#endif
