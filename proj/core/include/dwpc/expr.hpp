#ifndef DWPC_EXPR_HPP
#define DWPC_EXPR_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dwpc {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Domain error during evaluation (log of non-positive, division by zero, ...)
/// or a point/chart dimension mismatch.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExprOp : std::uint8_t {
    Constant, Var,
    Add, Sub, Mul, Div, Pow,
    Neg,
    Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh,
};

/// Immutable scalar expression over chart coordinates. Values share subtrees
/// (DAG), so copies are cheap and repeated differentiation stays compact.
/// Construction folds constants and the 0/1 identities, nothing more.
class Expr {
public:
    Expr() : Expr(constant(0.0)) {}

    static Expr constant(double v);
    static Expr variable(int index);

    ExprOp op() const;
    double constant_value() const;  // valid for Constant nodes
    int var_index() const;          // valid for Var nodes
    Expr child(int which) const;    // 0 = lhs/arg, 1 = rhs

    bool is_constant() const { return op() == ExprOp::Constant; }
    bool is_constant(double v) const;
    bool is_zero() const { return is_constant(0.0); }

    /// Largest variable index appearing in the expression, -1 if none.
    int max_var_index() const;
    std::size_t node_count() const;

    /// Evaluate at a point; point.size() must exceed max_var_index().
    double evaluate(std::span<const double> point) const;

    /// Exact symbolic partial derivative with respect to one coordinate.
    Expr derivative(int var) const;

    /// Same expression with every variable index shifted by `offset`.
    Expr shifted(int offset) const;

    /// Render with x<i> placeholders, or with the supplied coordinate names.
    std::string str() const;
    std::string str(std::span<const std::string> names) const;

    static Expr make(ExprOp op, Expr a, Expr b = Expr::constant(0.0));

    bool same_node(const Expr& other) const { return node_.get() == other.node_.get(); }

private:
    struct Node;
    using NodeP = std::shared_ptr<const Node>;
    explicit Expr(NodeP n) : node_(std::move(n)) {}
    NodeP node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

inline Expr operator+(const Expr& a, double b) { return a + Expr::constant(b); }
inline Expr operator+(double a, const Expr& b) { return Expr::constant(a) + b; }
inline Expr operator-(const Expr& a, double b) { return a - Expr::constant(b); }
inline Expr operator-(double a, const Expr& b) { return Expr::constant(a) - b; }
inline Expr operator*(const Expr& a, double b) { return a * Expr::constant(b); }
inline Expr operator*(double a, const Expr& b) { return Expr::constant(a) * b; }
inline Expr operator/(const Expr& a, double b) { return a / Expr::constant(b); }
inline Expr operator/(double a, const Expr& b) { return Expr::constant(a) / b; }

Expr pow(const Expr& base, const Expr& exponent);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr tanh(const Expr& a);

inline Expr square(const Expr& a) { return a * a; }

/// Parse an infix expression. Precedence ^ > unary- > *,/ > +,-; ^ is
/// right-associative; function application is name(expr). Identifiers must
/// name a known function or appear in `variables` (position = var index).
Expr parse_expr(std::string_view text, std::span<const std::string> variables);

}  // namespace dwpc

#endif
