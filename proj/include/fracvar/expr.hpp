// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACVAR_EXPR_HPP
#define FRACVAR_EXPR_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracvar/model.hpp"

namespace fracvar::expr {

// Grammar (whitespace is insignificant):
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
// so ^ is right-associative and binds tighter than unary minus: -2^2 = -4.

enum class Var { t, x, dax, dx };

struct EvalContext {
    double t = 0.0;
    double x = 0.0;
    double dax = 0.0;
    double dx = 0.0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    /// Character offset into the source text.
    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Node {
    enum class Kind { number, variable, pi, negate, binary, call };
    Kind kind = Kind::number;
    double value = 0.0;   // number
    Var var = Var::t;     // variable
    char op = 0;          // binary: + - * / ^
    std::string function; // call
    std::vector<std::unique_ptr<Node>> args;
    std::size_t offset = 0;
};

/// Immutable expression tree; copies share the tree.
class Expr {
public:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }
    double eval(const EvalContext& ctx) const;
    bool uses(Var v) const;
    /// Fully parenthesized source that parses back to an equivalent tree.
    std::string to_string() const;

private:
    std::shared_ptr<const Node> root_;
};

/// Throws ParseError on unknown identifiers, arity mismatches, unbalanced
/// parentheses or trailing input.
Expr parse(std::string_view source);

inline double eval(const Expr& e, const EvalContext& ctx) { return e.eval(ctx); }

/// Lagrangian from an expression in t, x, dax, dx. Partial derivatives are
/// central differences with step 1e−6·max(1, |argument|).
Lagrangian to_lagrangian(std::string_view source);

/// Function of t alone; throws ParseError if x, dax or dx appear.
std::function<double(double)> to_function_of_t(std::string_view source);

} // namespace fracvar::expr

#endif // FRACVAR_EXPR_HPP
