#include <doctest.h>

#include <random>
#include <vector>

#include "grs/expr.hpp"

using namespace grs;

TEST_CASE("evaluation of the reference expressions") {
    {
        const Jet2 j = Expr::parse("sin(u)").eval_at(0.0);
        CHECK(j.val == 0.0);
        CHECK(j.d1 == 1.0);
        CHECK(j.d2 == 0.0);
    }
    {
        const Jet2 j = Expr::parse("sqrt(u^2+1)").eval_at(0.0);
        CHECK(j.val == doctest::Approx(1.0));
        CHECK(j.d1 == doctest::Approx(0.0));
        CHECK(j.d2 == doctest::Approx(1.0));
    }
    {
        const Jet2 j = Expr::parse("2+0.3*sin(u)").eval_at(0.0);
        CHECK(j.val == doctest::Approx(2.0));
        CHECK(j.d1 == doctest::Approx(0.3));
        CHECK(j.d2 == doctest::Approx(0.0));
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(Expr::parse("2^3^2").eval_at(0.0).val == 512.0);   // right-associative
    CHECK(Expr::parse("-2^2").eval_at(0.0).val == -4.0);     // ^ binds tighter than unary -
    CHECK(Expr::parse("(-2)^2").eval_at(0.0).val == 4.0);
    CHECK(Expr::parse("2^-2").eval_at(0.0).val == 0.25);     // exponent may carry unary -
    CHECK(Expr::parse("1+2*3").eval_at(0.0).val == 7.0);
    CHECK(Expr::parse("6/2/3").eval_at(0.0).val == 1.0);     // left-associative
    CHECK(Expr::parse("1-2-3").eval_at(0.0).val == -4.0);
    CHECK(Expr::parse("u^2").eval_at(-3.0).val == 9.0);      // integer power of negative base
    CHECK(Expr::parse(" 1 + u ").eval_at(2.0).val == 3.0);   // whitespace insignificant
}

TEST_CASE("parse errors carry a position") {
    auto pos_of = [](std::string_view src) {
        try {
            Expr::parse(src);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos_of("x+1") == 0);          // unknown identifier
    CHECK(pos_of("1+vv") == 2);
    CHECK(pos_of("sin(") == 4);         // missing operand
    CHECK(pos_of("sin 2") == 4);        // function needs parentheses
    CHECK(pos_of("(1+2") == 4);         // unclosed group
    CHECK(pos_of("1+") == 2);
    CHECK(pos_of("1 2") == 2);          // trailing input
    CHECK(pos_of("") == 0);
    CHECK_THROWS_AS(Expr::parse("cot(u)"), ParseError);
}

TEST_CASE("evaluation domain errors surface as exceptions") {
    CHECK_THROWS_AS(Expr::parse("ln(u)").eval_at(-1.0), DomainError);
    CHECK_THROWS_AS(Expr::parse("sqrt(u)").eval_at(-1.0), DomainError);
    CHECK_THROWS_AS(Expr::parse("1/u").eval_at(0.0), DomainError);
    CHECK_THROWS_AS(Expr::parse("exp(u)").eval_at(1e9), DomainError);  // overflow -> non-finite
}

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
    std::uniform_int_distribution<int> fnpick(0, 10);
    const double numbers[] = {0.5, 1.0, 2.0, 0.25, 3.75};
    switch (pick(rng)) {
    case 0: return Expr::var();
    case 1:
    case 2: return Expr::number(numbers[fnpick(rng) % 5]);
    case 3: return Expr::unary_minus(random_expr(rng, depth - 1));
    case 4: return Expr::binary(Expr::Kind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return Expr::binary(Expr::Kind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return Expr::binary(Expr::Kind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::binary(Expr::Kind::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 8: return Expr::binary(Expr::Kind::Pow, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
        return Expr::call(static_cast<Expr::Func>(fnpick(rng)), random_expr(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("pretty-print round trip rebuilds an identical tree") {
    std::mt19937_64 rng(0x5EED);
    for (int i = 0; i < 500; ++i) {
        const Expr e = random_expr(rng, 4);
        const std::string printed = e.str();
        CAPTURE(printed);
        const Expr back = Expr::parse(printed);
        CHECK(e.same_structure(back));
        CHECK(back.str() == printed);
    }
}

TEST_CASE("printer drops redundant parentheses") {
    CHECK(Expr::parse("((u))").str() == "u");
    CHECK(Expr::parse("(u+1)*u").str() == "(u+1)*u");
    CHECK(Expr::parse("u+(1*u)").str() == "u+1*u");
    CHECK(Expr::parse("-(u*u)").str() == "-(u*u)");
    CHECK(Expr::parse("-(u)^2").str() == "-u^2");
}
