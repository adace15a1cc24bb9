#include "dwpc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace dwpc {

struct Expr::Node {
    ExprOp op = ExprOp::Constant;
    double value = 0.0;
    int var = -1;
    NodeP a, b;
    int max_var = -1;
};

namespace {

bool is_binary(ExprOp op) {
    switch (op) {
        case ExprOp::Add: case ExprOp::Sub: case ExprOp::Mul:
        case ExprOp::Div: case ExprOp::Pow:
            return true;
        default:
            return false;
    }
}

double apply_unary(ExprOp op, double x) {
    switch (op) {
        case ExprOp::Neg:  return -x;
        case ExprOp::Sin:  return std::sin(x);
        case ExprOp::Cos:  return std::cos(x);
        case ExprOp::Tan:  return std::tan(x);
        case ExprOp::Exp:  return std::exp(x);
        case ExprOp::Log:
            if (x <= 0.0) throw EvalError("log of non-positive value");
            return std::log(x);
        case ExprOp::Sqrt:
            if (x < 0.0) throw EvalError("sqrt of negative value");
            return std::sqrt(x);
        case ExprOp::Sinh: return std::sinh(x);
        case ExprOp::Cosh: return std::cosh(x);
        case ExprOp::Tanh: return std::tanh(x);
        default:
            throw EvalError("not a unary op");
    }
}

double apply_binary(ExprOp op, double x, double y) {
    switch (op) {
        case ExprOp::Add: return x + y;
        case ExprOp::Sub: return x - y;
        case ExprOp::Mul: return x * y;
        case ExprOp::Div:
            if (y == 0.0) throw EvalError("division by zero");
            return x / y;
        case ExprOp::Pow: {
            double r = std::pow(x, y);
            if (!std::isfinite(r)) throw EvalError("pow outside real domain");
            return r;
        }
        default:
            throw EvalError("not a binary op");
    }
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Expr Expr::constant(double v) {
    auto n = std::make_shared<Node>();
    n->op = ExprOp::Constant;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::variable(int index) {
    auto n = std::make_shared<Node>();
    n->op = ExprOp::Var;
    n->var = index;
    n->max_var = index;
    return Expr(std::move(n));
}

ExprOp Expr::op() const { return node_->op; }
double Expr::constant_value() const { return node_->value; }
int Expr::var_index() const { return node_->var; }
Expr Expr::child(int which) const { return Expr(which == 0 ? node_->a : node_->b); }

bool Expr::is_constant(double v) const {
    return node_->op == ExprOp::Constant && node_->value == v;
}

int Expr::max_var_index() const { return node_->max_var; }

std::size_t Expr::node_count() const {
    std::unordered_map<const Node*, bool> seen;
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (!n || seen.count(n)) continue;
        seen[n] = true;
        if (n->a) stack.push_back(n->a.get());
        if (n->b) stack.push_back(n->b.get());
    }
    return seen.size();
}

Expr Expr::make(ExprOp op, Expr a, Expr b) {
    // Constant folding. Skipped when the fold itself would raise a domain
    // error so the error surfaces at evaluation time instead.
    if (op == ExprOp::Neg && a.is_constant())
        return constant(-a.constant_value());
    if (!is_binary(op) && op != ExprOp::Neg && a.is_constant()) {
        try {
            return constant(apply_unary(op, a.constant_value()));
        } catch (const EvalError&) {
        }
    }
    if (is_binary(op) && a.is_constant() && b.is_constant()) {
        try {
            return constant(apply_binary(op, a.constant_value(), b.constant_value()));
        } catch (const EvalError&) {
        }
    }

    // 0/1 identities.
    switch (op) {
        case ExprOp::Add:
            if (a.is_zero()) return b;
            if (b.is_zero()) return a;
            break;
        case ExprOp::Sub:
            if (b.is_zero()) return a;
            if (a.is_zero()) return make(ExprOp::Neg, b);
            if (a.same_node(b)) return constant(0.0);
            break;
        case ExprOp::Mul:
            if (a.is_zero() || b.is_zero()) return constant(0.0);
            if (a.is_constant(1.0)) return b;
            if (b.is_constant(1.0)) return a;
            break;
        case ExprOp::Div:
            if (a.is_zero()) return constant(0.0);
            if (b.is_constant(1.0)) return a;
            break;
        case ExprOp::Pow:
            if (b.is_constant(1.0)) return a;
            if (b.is_constant(0.0)) return constant(1.0);
            if (a.is_constant(1.0)) return constant(1.0);
            break;
        case ExprOp::Neg:
            if (a.op() == ExprOp::Neg) return a.child(0);
            break;
        default:
            break;
    }

    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a.node_;
    n->max_var = a.max_var_index();
    if (is_binary(op)) {
        n->b = b.node_;
        n->max_var = std::max(n->max_var, b.max_var_index());
    }
    return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::make(ExprOp::Neg, a); }
Expr pow(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Pow, a, b); }
Expr sin(const Expr& a) { return Expr::make(ExprOp::Sin, a); }
Expr cos(const Expr& a) { return Expr::make(ExprOp::Cos, a); }
Expr tan(const Expr& a) { return Expr::make(ExprOp::Tan, a); }
Expr exp(const Expr& a) { return Expr::make(ExprOp::Exp, a); }
Expr log(const Expr& a) { return Expr::make(ExprOp::Log, a); }
Expr sqrt(const Expr& a) { return Expr::make(ExprOp::Sqrt, a); }
Expr sinh(const Expr& a) { return Expr::make(ExprOp::Sinh, a); }
Expr cosh(const Expr& a) { return Expr::make(ExprOp::Cosh, a); }
Expr tanh(const Expr& a) { return Expr::make(ExprOp::Tanh, a); }

double Expr::evaluate(std::span<const double> point) const {
    if (node_->max_var >= static_cast<int>(point.size()))
        throw EvalError("point dimension " + std::to_string(point.size()) +
                        " too small for variable index " + std::to_string(node_->max_var));
    // Shared subtrees are evaluated once per call.
    std::unordered_map<const Node*, double> memo;
    auto eval = [&](auto&& self, const Node* n) -> double {
        if (n->op == ExprOp::Constant) return n->value;
        if (n->op == ExprOp::Var) return point[static_cast<std::size_t>(n->var)];
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        double r;
        if (is_binary(n->op))
            r = apply_binary(n->op, self(self, n->a.get()), self(self, n->b.get()));
        else
            r = apply_unary(n->op, self(self, n->a.get()));
        if (!std::isfinite(r)) throw EvalError("non-finite intermediate value");
        memo.emplace(n, r);
        return r;
    };
    return eval(eval, node_.get());
}

Expr Expr::derivative(int var) const {
    std::unordered_map<const Node*, Expr> memo;
    auto diff = [&](auto&& self, const Expr& e) -> Expr {
        const Node* n = e.node_.get();
        if (n->max_var < var && n->op != ExprOp::Var) {
            // cannot depend on var unless some index >= var... still need the
            // exact test below; this is only a fast path for constants
            if (n->op == ExprOp::Constant) return constant(0.0);
        }
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        Expr r = constant(0.0);
        Expr u = n->a ? Expr(n->a) : Expr();
        Expr v = n->b ? Expr(n->b) : Expr();
        switch (n->op) {
            case ExprOp::Constant: r = constant(0.0); break;
            case ExprOp::Var: r = constant(n->var == var ? 1.0 : 0.0); break;
            case ExprOp::Add: r = self(self, u) + self(self, v); break;
            case ExprOp::Sub: r = self(self, u) - self(self, v); break;
            case ExprOp::Mul: r = self(self, u) * v + u * self(self, v); break;
            case ExprOp::Div:
                r = (self(self, u) * v - u * self(self, v)) / (v * v);
                break;
            case ExprOp::Pow:
                if (v.is_constant()) {
                    // d(u^c) = c u^(c-1) u'
                    double c = v.constant_value();
                    r = constant(c) * pow(u, constant(c - 1.0)) * self(self, u);
                } else {
                    // d(u^v) = u^v (v' log u + v u'/u)
                    r = pow(u, v) * (self(self, v) * log(u) + v * self(self, u) / u);
                }
                break;
            case ExprOp::Neg:  r = -self(self, u); break;
            case ExprOp::Sin:  r = cos(u) * self(self, u); break;
            case ExprOp::Cos:  r = -(sin(u) * self(self, u)); break;
            case ExprOp::Tan:  r = (constant(1.0) + square(tan(u))) * self(self, u); break;
            case ExprOp::Exp:  r = exp(u) * self(self, u); break;
            case ExprOp::Log:  r = self(self, u) / u; break;
            case ExprOp::Sqrt: r = self(self, u) / (constant(2.0) * sqrt(u)); break;
            case ExprOp::Sinh: r = cosh(u) * self(self, u); break;
            case ExprOp::Cosh: r = sinh(u) * self(self, u); break;
            case ExprOp::Tanh: r = (constant(1.0) - square(tanh(u))) * self(self, u); break;
        }
        memo.emplace(n, r);
        return r;
    };
    return diff(diff, *this);
}

Expr Expr::shifted(int offset) const {
    if (offset == 0 || node_->max_var < 0) return *this;
    std::unordered_map<const Node*, Expr> memo;
    auto walk = [&](auto&& self, const Expr& e) -> Expr {
        const Node* n = e.node_.get();
        if (n->op == ExprOp::Constant) return e;
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        Expr r;
        if (n->op == ExprOp::Var)
            r = variable(n->var + offset);
        else if (is_binary(n->op))
            r = make(n->op, self(self, Expr(n->a)), self(self, Expr(n->b)));
        else
            r = make(n->op, self(self, Expr(n->a)));
        memo.emplace(n, r);
        return r;
    };
    return walk(walk, *this);
}

namespace {

const char* func_name(ExprOp op) {
    switch (op) {
        case ExprOp::Sin: return "sin";
        case ExprOp::Cos: return "cos";
        case ExprOp::Tan: return "tan";
        case ExprOp::Exp: return "exp";
        case ExprOp::Log: return "log";
        case ExprOp::Sqrt: return "sqrt";
        case ExprOp::Sinh: return "sinh";
        case ExprOp::Cosh: return "cosh";
        case ExprOp::Tanh: return "tanh";
        default: return nullptr;
    }
}

// precedence: + - (1), * / (2), unary - (3), ^ (4), atom (5)
void print_node(const Expr& e, int parent_prec, std::span<const std::string> names,
                std::string& out) {
    switch (e.op()) {
        case ExprOp::Constant: {
            double v = e.constant_value();
            if (v < 0.0 && parent_prec > 1) {
                out += '(';
                out += format_number(v);
                out += ')';
            } else {
                out += format_number(v);
            }
            return;
        }
        case ExprOp::Var: {
            int i = e.var_index();
            if (i >= 0 && i < static_cast<int>(names.size()))
                out += names[static_cast<std::size_t>(i)];
            else
                out += "x" + std::to_string(i);
            return;
        }
        case ExprOp::Add: case ExprOp::Sub: {
            bool parens = parent_prec > 1;
            if (parens) out += '(';
            print_node(e.child(0), 1, names, out);
            out += e.op() == ExprOp::Add ? " + " : " - ";
            print_node(e.child(1), 2, names, out);  // right side binds tighter
            if (parens) out += ')';
            return;
        }
        case ExprOp::Mul: case ExprOp::Div: {
            bool parens = parent_prec > 2;
            if (parens) out += '(';
            print_node(e.child(0), 2, names, out);
            out += e.op() == ExprOp::Mul ? "*" : "/";
            print_node(e.child(1), 3, names, out);
            if (parens) out += ')';
            return;
        }
        case ExprOp::Neg: {
            bool parens = parent_prec > 3;
            if (parens) out += '(';
            out += '-';
            print_node(e.child(0), 4, names, out);
            if (parens) out += ')';
            return;
        }
        case ExprOp::Pow: {
            bool parens = parent_prec > 4;
            if (parens) out += '(';
            print_node(e.child(0), 5, names, out);
            out += '^';
            print_node(e.child(1), 4, names, out);  // right-associative
            if (parens) out += ')';
            return;
        }
        default: {
            out += func_name(e.op());
            out += '(';
            print_node(e.child(0), 0, names, out);
            out += ')';
            return;
        }
    }
}

}  // namespace

std::string Expr::str() const { return str({}); }

std::string Expr::str(std::span<const std::string> names) const {
    std::string out;
    print_node(*this, 0, names, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::span<const std::string> vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) {
        throw ParseError(msg, at);
    }

    Expr parse() {
        skip_ws();
        if (pos >= text.size()) fail("empty input", 0);
        Expr e = sum();
        skip_ws();
        if (pos < text.size()) fail("unexpected trailing input", pos);
        return e;
    }

    Expr sum() {
        Expr e = term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos; e = e + term(); }
            else if (c == '-') { ++pos; e = e - term(); }
            else return e;
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos; e = e * unary(); }
            else if (c == '/') { ++pos; e = e / unary(); }
            else return e;
        }
    }

    Expr unary() {
        if (peek() == '-') {
            ++pos;
            return -unary();
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (peek() == '^') {
            ++pos;
            return dwpc::pow(base, unary());  // right-associative, binds above unary-
        }
        return base;
    }

    Expr atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            std::size_t open = pos;
            ++pos;
            Expr e = sum();
            if (peek() != ')') fail("unbalanced parenthesis", open);
            ++pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    Expr number() {
        const char* begin = text.data() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number", pos);
        pos += static_cast<std::size_t>(end - begin);
        return Expr::constant(v);
    }

    Expr identifier() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name(text.substr(start, pos - start));

        if (peek() == '(') {
            ExprOp op;
            if (name == "sin") op = ExprOp::Sin;
            else if (name == "cos") op = ExprOp::Cos;
            else if (name == "tan") op = ExprOp::Tan;
            else if (name == "exp") op = ExprOp::Exp;
            else if (name == "log") op = ExprOp::Log;
            else if (name == "sqrt") op = ExprOp::Sqrt;
            else if (name == "sinh") op = ExprOp::Sinh;
            else if (name == "cosh") op = ExprOp::Cosh;
            else if (name == "tanh") op = ExprOp::Tanh;
            else fail("unknown function '" + name + "'", start);
            std::size_t open = pos;
            ++pos;  // consume '('
            Expr arg = sum();
            if (peek() != ')') fail("unbalanced parenthesis", open);
            ++pos;
            return Expr::make(op, arg);
        }

        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return Expr::variable(static_cast<int>(i));
        fail("unknown identifier '" + name + "'", start);
    }
};

}  // namespace

Expr parse_expr(std::string_view text, std::span<const std::string> variables) {
    Parser p{text, 0, variables};
    return p.parse();
}

}  // namespace dwpc
