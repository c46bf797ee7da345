// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fracvar/errors.hpp"
#include "fracvar/special.hpp"

namespace fracvar::expr {
namespace {

constexpr int kMaxDepth = 200;

struct FunctionInfo {
    std::string_view name;
    std::size_t arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"gamma", 1}, {"sqrt", 1}, {"exp", 1}, {"log", 1}, {"sin", 1},
    {"cos", 1},   {"abs", 1},  {"pow", 2},
};

const FunctionInfo* find_function(std::string_view name) {
    for (const auto& f : kFunctions) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

bool lookup_variable(std::string_view name, Var& out) {
    if (name == "t") out = Var::t;
    else if (name == "x") out = Var::x;
    else if (name == "dax") out = Var::dax;
    else if (name == "dx") out = Var::dx;
    else return false;
    return true;
}

std::string_view variable_name(Var v) {
    switch (v) {
    case Var::t: return "t";
    case Var::x: return "x";
    case Var::dax: return "dax";
    case Var::dx: return "dx";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    std::unique_ptr<Node> parse_all() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ < src_.size()) {
            if (src_[pos_] == ')') fail("unbalanced parenthesis: unexpected ')'");
            fail(std::string("unexpected trailing input '") + src_[pos_] + "'");
        }
        return e;
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth) p_.fail("expression nested too deeply");
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::unique_ptr<Node> binary(char op, std::unique_ptr<Node> l, std::unique_ptr<Node> r,
                                        std::size_t offset) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::binary;
        n->op = op;
        n->offset = offset;
        n->args.push_back(std::move(l));
        n->args.push_back(std::move(r));
        return n;
    }

    std::unique_ptr<Node> parse_expr() {
        DepthGuard guard(*this);
        auto lhs = parse_term();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+')) lhs = binary('+', std::move(lhs), parse_term(), at);
            else if (accept('-')) lhs = binary('-', std::move(lhs), parse_term(), at);
            else return lhs;
        }
    }

    std::unique_ptr<Node> parse_term() {
        auto lhs = parse_unary();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*')) lhs = binary('*', std::move(lhs), parse_unary(), at);
            else if (accept('/')) lhs = binary('/', std::move(lhs), parse_unary(), at);
            else return lhs;
        }
    }

    std::unique_ptr<Node> parse_unary() {
        DepthGuard guard(*this);
        skip_ws();
        const std::size_t at = pos_;
        if (accept('-')) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::negate;
            n->offset = at;
            n->args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    std::unique_ptr<Node> parse_power() {
        auto base = parse_atom();
        skip_ws();
        const std::size_t at = pos_;
        if (accept('^')) return binary('^', std::move(base), parse_unary(), at);
        return base;
    }

    std::unique_ptr<Node> parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const std::size_t at = pos_;
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!accept(')')) fail("unbalanced parenthesis: expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = src_.substr(at, pos_ - at);
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '(') return parse_call(name, at);
            auto n = std::make_unique<Node>();
            n->offset = at;
            if (name == "pi") {
                n->kind = Node::Kind::pi;
                return n;
            }
            Var v;
            if (!lookup_variable(name, v)) {
                pos_ = at;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            n->kind = Node::Kind::variable;
            n->var = v;
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::unique_ptr<Node> parse_call(std::string_view name, std::size_t at) {
        const FunctionInfo* info = find_function(name);
        if (!info) {
            pos_ = at;
            fail("unknown function '" + std::string(name) + "'");
        }
        accept('(');
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::call;
        n->function = std::string(name);
        n->offset = at;
        n->args.push_back(parse_expr());
        while (accept(',')) n->args.push_back(parse_expr());
        if (!accept(')')) fail("unbalanced parenthesis: expected ')' closing call to " + n->function);
        if (n->args.size() != info->arity) {
            pos_ = at;
            fail("function '" + n->function + "' takes " + std::to_string(info->arity) +
                 " argument(s), got " + std::to_string(n->args.size()));
        }
        return n;
    }

    std::unique_ptr<Node> parse_number() {
        const std::size_t at = pos_;
        auto digits = [&] {
            const std::size_t s = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return pos_ - s;
        };
        std::size_t count = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) fail("malformed number");
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) {
                pos_ = mark;
                fail("malformed exponent");
            }
        }
        const std::string_view text = src_.substr(at, pos_ - at);
        double v = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc() || !std::isfinite(v)) {
            pos_ = at;
            fail("number out of range '" + std::string(text) + "'");
        }
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::number;
        n->value = v;
        n->offset = at;
        return n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

void print(const Node& n, std::string& out) {
    switch (n.kind) {
    case Node::Kind::number: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.value);
        out += buf;
        return;
    }
    case Node::Kind::variable:
        out += variable_name(n.var);
        return;
    case Node::Kind::pi:
        out += "pi";
        return;
    case Node::Kind::negate:
        out += "(-";
        print(*n.args[0], out);
        out += ')';
        return;
    case Node::Kind::binary:
        out += '(';
        print(*n.args[0], out);
        out += n.op;
        print(*n.args[1], out);
        out += ')';
        return;
    case Node::Kind::call:
        out += n.function;
        out += '(';
        for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ',';
            print(*n.args[i], out);
        }
        out += ')';
        return;
    }
}

[[noreturn]] void eval_fail(const Node& n, const std::string& what) {
    std::string src;
    print(n, src);
    throw EvalError(what + " in '" + src + "' (offset " + std::to_string(n.offset) + ")");
}

double real_pow(const Node& n, double base, double exponent) {
    if (base < 0.0 && exponent != std::floor(exponent)) {
        eval_fail(n, "negative base with non-integer exponent");
    }
    if (base == 0.0 && exponent < 0.0) eval_fail(n, "zero raised to a negative power");
    return std::pow(base, exponent);
}

double evaluate(const Node& n, const EvalContext& ctx) {
    switch (n.kind) {
    case Node::Kind::number:
        return n.value;
    case Node::Kind::pi:
        return std::numbers::pi;
    case Node::Kind::variable:
        switch (n.var) {
        case Var::t: return ctx.t;
        case Var::x: return ctx.x;
        case Var::dax: return ctx.dax;
        case Var::dx: return ctx.dx;
        }
        return 0.0;
    case Node::Kind::negate:
        return -evaluate(*n.args[0], ctx);
    case Node::Kind::binary: {
        const double l = evaluate(*n.args[0], ctx);
        const double r = evaluate(*n.args[1], ctx);
        switch (n.op) {
        case '+': return l + r;
        case '-': return l - r;
        case '*': return l * r;
        case '/':
            if (r == 0.0) eval_fail(n, "division by zero");
            return l / r;
        case '^': return real_pow(n, l, r);
        }
        return 0.0;
    }
    case Node::Kind::call: {
        const double a = evaluate(*n.args[0], ctx);
        const std::string& f = n.function;
        if (f == "gamma") {
            try {
                return fracvar::gamma(a);
            } catch (const DomainError&) {
                eval_fail(n, "gamma pole");
            }
        }
        if (f == "sqrt") {
            if (a < 0.0) eval_fail(n, "square root of a negative number");
            return std::sqrt(a);
        }
        if (f == "exp") return std::exp(a);
        if (f == "log") {
            if (!(a > 0.0)) eval_fail(n, "logarithm of a non-positive number");
            return std::log(a);
        }
        if (f == "sin") return std::sin(a);
        if (f == "cos") return std::cos(a);
        if (f == "abs") return std::abs(a);
        if (f == "pow") return real_pow(n, a, evaluate(*n.args[1], ctx));
        eval_fail(n, "unknown function");
    }
    }
    return 0.0;
}

bool node_uses(const Node& n, Var v) {
    if (n.kind == Node::Kind::variable && n.var == v) return true;
    return std::any_of(n.args.begin(), n.args.end(),
                       [v](const auto& c) { return node_uses(*c, v); });
}

// Leftmost variable node other than t, or null.
const Node* first_non_t(const Node& n) {
    if (n.kind == Node::Kind::variable && n.var != Var::t) return &n;
    for (const auto& c : n.args) {
        if (const Node* hit = first_non_t(*c)) return hit;
    }
    return nullptr;
}

} // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
      message_(message),
      offset_(offset) {}

double Expr::eval(const EvalContext& ctx) const { return evaluate(*root_, ctx); }

bool Expr::uses(Var v) const { return node_uses(*root_, v); }

std::string Expr::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

Expr parse(std::string_view source) {
    Parser p(source);
    return Expr(std::shared_ptr<const Node>(p.parse_all()));
}

Lagrangian to_lagrangian(std::string_view source) {
    const Expr e = parse(source);
    auto at = [e](double t, double x, double dax, double xdot) {
        return e.eval(EvalContext{t, x, dax, xdot});
    };
    // Central difference in argument `arg` of (t, x, dax, dx).
    auto partial = [at](int arg) {
        return [at, arg](double t, double x, double dax, double xdot) {
            double up[4] = {t, x, dax, xdot};
            double dn[4] = {t, x, dax, xdot};
            const double step = 1e-6 * std::max(1.0, std::abs(up[arg]));
            up[arg] += step;
            dn[arg] -= step;
            return (at(up[0], up[1], up[2], up[3]) - at(dn[0], dn[1], dn[2], dn[3])) /
                   (up[arg] - dn[arg]);
        };
    };
    Lagrangian L;
    L.eval = at;
    L.d_x = partial(1);
    L.d_dax = partial(2);
    L.uses_xdot = e.uses(Var::dx);
    if (L.uses_xdot) {
        L.d_xdot = partial(3);
    } else {
        L.d_xdot = [](double, double, double, double) { return 0.0; };
    }
    return L;
}

std::function<double(double)> to_function_of_t(std::string_view source) {
    const Expr e = parse(source);
    if (const Node* bad = first_non_t(e.root())) {
        throw ParseError("expression may only use the variable t, found '" +
                             std::string(variable_name(bad->var)) + "'",
                         bad->offset);
    }
    return [e](double t) { return e.eval(EvalContext{t, 0.0, 0.0, 0.0}); };
}

} // namespace fracvar::expr
