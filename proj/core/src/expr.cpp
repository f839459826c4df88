#include "grs/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

#include "grs/numfmt.hpp"

namespace grs {

namespace {

struct FuncName {
    std::string_view name;
    Expr::Func func;
};

constexpr std::array<FuncName, 11> kFuncs{{
    {"sin", Expr::Func::Sin}, {"cos", Expr::Func::Cos}, {"tan", Expr::Func::Tan},
    {"asin", Expr::Func::Asin}, {"atan", Expr::Func::Atan}, {"sinh", Expr::Func::Sinh},
    {"cosh", Expr::Func::Cosh}, {"ln", Expr::Func::Ln}, {"exp", Expr::Func::Exp},
    {"sqrt", Expr::Func::Sqrt}, {"abs", Expr::Func::Abs},
}};

std::string_view func_name(Expr::Func f) {
    for (const auto& e : kFuncs)
        if (e.func == f) return e.name;
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr::NodePtr run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Expr::NodePtr parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            if (eat('+')) lhs = mk(Expr::Kind::Add, lhs, parse_term());
            else if (eat('-')) lhs = mk(Expr::Kind::Sub, lhs, parse_term());
            else return lhs;
        }
    }

    Expr::NodePtr parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            if (eat('*')) lhs = mk(Expr::Kind::Mul, lhs, parse_factor());
            else if (eat('/')) lhs = mk(Expr::Kind::Div, lhs, parse_factor());
            else return lhs;
        }
    }

    Expr::NodePtr parse_factor() {
        if (eat('-')) {
            auto n = std::make_shared<Expr::Node>();
            n->kind = Expr::Kind::Neg;
            n->a = parse_power();
            return n;
        }
        return parse_power();
    }

    Expr::NodePtr parse_power() {
        auto base = parse_atom();
        if (eat('^')) return mk(Expr::Kind::Pow, base, parse_factor());
        return base;
    }

    Expr::NodePtr parse_atom() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            auto e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        fail("expected number, 'u', function call, or '('");
    }

    Expr::NodePtr parse_number() {
        skip_ws();
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        auto n = std::make_shared<Expr::Node>();
        n->kind = Expr::Kind::Number;
        n->number = value;
        return n;
    }

    Expr::NodePtr parse_identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string_view id = src_.substr(start, pos_ - start);
        if (id == "u") {
            auto n = std::make_shared<Expr::Node>();
            n->kind = Expr::Kind::Var;
            return n;
        }
        for (const auto& e : kFuncs) {
            if (id == e.name) {
                if (!eat('(')) fail("expected '(' after function name");
                auto arg = parse_expr();
                if (!eat(')')) fail("expected ')'");
                auto n = std::make_shared<Expr::Node>();
                n->kind = Expr::Kind::Call;
                n->func = e.func;
                n->a = arg;
                return n;
            }
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(id) + "'");
    }

    static Expr::NodePtr mk(Expr::Kind k, Expr::NodePtr a, Expr::NodePtr b) {
        auto n = std::make_shared<Expr::Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
};

Jet2 eval_node(const Expr::Node& n, const Jet2& u) {
    switch (n.kind) {
    case Expr::Kind::Number: return Jet2::constant(n.number);
    case Expr::Kind::Var: return u;
    case Expr::Kind::Neg: return -eval_node(*n.a, u);
    case Expr::Kind::Add: return eval_node(*n.a, u) + eval_node(*n.b, u);
    case Expr::Kind::Sub: return eval_node(*n.a, u) - eval_node(*n.b, u);
    case Expr::Kind::Mul: return eval_node(*n.a, u) * eval_node(*n.b, u);
    case Expr::Kind::Div: return eval_node(*n.a, u) / eval_node(*n.b, u);
    case Expr::Kind::Pow: return pow(eval_node(*n.a, u), eval_node(*n.b, u));
    case Expr::Kind::Call: {
        const Jet2 a = eval_node(*n.a, u);
        switch (n.func) {
        case Expr::Func::Sin: return sin(a);
        case Expr::Func::Cos: return cos(a);
        case Expr::Func::Tan: return tan(a);
        case Expr::Func::Asin: return asin(a);
        case Expr::Func::Atan: return atan(a);
        case Expr::Func::Sinh: return sinh(a);
        case Expr::Func::Cosh: return cosh(a);
        case Expr::Func::Ln: return ln(a);
        case Expr::Func::Exp: return exp(a);
        case Expr::Func::Sqrt: return sqrt(a);
        case Expr::Func::Abs: return abs(a);
        }
        break;
    }
    }
    throw Error("corrupt expression node");
}

// precedence levels for printing: 0 expr, 1 term, 2 factor, 3 power, 4 atom
int node_level(const Expr::Node& n) {
    switch (n.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 0;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
    }
}

void print_node(std::string& out, const Expr::Node& n, int min_level) {
    const int level = node_level(n);
    const bool parens = level < min_level;
    if (parens) out += '(';
    switch (n.kind) {
    case Expr::Kind::Number: out += format_shortest(n.number); break;
    case Expr::Kind::Var: out += 'u'; break;
    case Expr::Kind::Neg:
        out += '-';
        print_node(out, *n.a, 3);
        break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        print_node(out, *n.a, 0);
        out += (n.kind == Expr::Kind::Add) ? '+' : '-';
        print_node(out, *n.b, 1);
        break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        print_node(out, *n.a, 1);
        out += (n.kind == Expr::Kind::Mul) ? '*' : '/';
        print_node(out, *n.b, 2);
        break;
    case Expr::Kind::Pow:
        print_node(out, *n.a, 4);
        out += '^';
        print_node(out, *n.b, 2);
        break;
    case Expr::Kind::Call:
        out += func_name(n.func);
        out += '(';
        print_node(out, *n.a, 0);
        out += ')';
        break;
    }
    if (parens) out += ')';
}

bool same_node(const Expr::Node& a, const Expr::Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Expr::Kind::Number: {
        // bit-compare so that -0.0 and 0.0 stay distinguishable
        return a.number == b.number && std::signbit(a.number) == std::signbit(b.number);
    }
    case Expr::Kind::Var: return true;
    case Expr::Kind::Neg: return same_node(*a.a, *b.a);
    case Expr::Kind::Call: return a.func == b.func && same_node(*a.a, *b.a);
    default: return same_node(*a.a, *b.a) && same_node(*a.b, *b.b);
    }
}

} // namespace

Expr Expr::parse(std::string_view src) { return Expr(Parser(src).run()); }

Jet2 Expr::eval(const Jet2& u) const {
    const Jet2 r = eval_node(*root_, u);
    if (!is_finite(r)) throw DomainError("expression evaluated to a non-finite jet");
    return r;
}

std::string Expr::str() const {
    std::string out;
    print_node(out, *root_, 0);
    return out;
}

bool Expr::same_structure(const Expr& other) const { return same_node(*root_, *other.root_); }

Expr Expr::number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->number = v;
    return Expr(std::move(n));
}

Expr Expr::var() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    return Expr(std::move(n));
}

Expr Expr::unary_minus(Expr a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = a.root();
    return Expr(std::move(n));
}

Expr Expr::binary(Kind op, Expr a, Expr b) {
    auto n = std::make_shared<Node>();
    n->kind = op;
    n->a = a.root();
    n->b = b.root();
    return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->func = f;
    n->a = a.root();
    return Expr(std::move(n));
}

} // namespace grs
