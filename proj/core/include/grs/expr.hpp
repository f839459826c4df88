#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "grs/jet.hpp"

namespace grs {

/// Immutable AST for the meridian expression language.
///
/// Grammar (whitespace insignificant):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := ("-")? power
///   power  := atom ("^" factor)?
///   atom   := number | "u" | func "(" expr ")" | "(" expr ")"
///   func   := sin|cos|tan|asin|atan|sinh|cosh|ln|exp|sqrt|abs
///
/// "^" binds tighter than unary minus and is right-associative.
class Expr {
public:
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
    enum class Func { Sin, Cos, Tan, Asin, Atan, Sinh, Cosh, Ln, Exp, Sqrt, Abs };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        double number = 0.0;  // Kind::Number
        Func func = Func::Sin; // Kind::Call
        NodePtr a;            // operand / lhs
        NodePtr b;            // rhs
    };

    /// Throws ParseError with a position on malformed input.
    static Expr parse(std::string_view src);

    /// Evaluate at the given jet of the variable u. Throws DomainError when a
    /// primitive leaves its domain or the result is non-finite.
    Jet2 eval(const Jet2& u) const;
    Jet2 eval_at(double u) const { return eval(Jet2::variable(u)); }

    /// Minimal-parenthesis rendering; parse(str()) rebuilds an identical tree.
    std::string str() const;

    bool same_structure(const Expr& other) const;

    // direct constructors, used by tests and generators
    static Expr number(double v);
    static Expr var();
    static Expr unary_minus(Expr a);
    static Expr binary(Kind op, Expr a, Expr b);
    static Expr call(Func f, Expr a);

    const NodePtr& root() const noexcept { return root_; }

private:
    explicit Expr(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

} // namespace grs
