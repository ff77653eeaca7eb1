#include <doctest.h>

#include "cartan/parser.hpp"
#include "random_exprs.hpp"

using namespace cartan;

TEST_CASE("literals and identifiers") {
    CHECK(parse_expression("0") == Expression());
    CHECK(parse_expression("-7") == Expression(-7));
    CHECK(parse_expression("1/2") == Expression(Gaussian(mpq_class(1, 2))));
    CHECK(parse_expression("i") == Expression::i());
    CHECK(parse_expression("x") == Expression::variable(Coord::x));
    CHECK(parse_expression("u3") == Expression::variable(Coord::u3));
}

TEST_CASE("precedence and grouping") {
    Expression x = Expression::variable(Coord::x), y = Expression::variable(Coord::y);
    CHECK(parse_expression("x + y*x") == x + y * x);
    CHECK(parse_expression("(x + y)*x") == (x + y) * x);
    CHECK(parse_expression("x^3") == x.pow(3));
    CHECK(parse_expression("-x^2") == -(x.pow(2)));
    CHECK(parse_expression("x/y/x") == x / y / x);
    CHECK(parse_expression("2*i*x - 1") == Expression(2) * Expression::i() * x - Expression(1));
}

TEST_CASE("print-parse is a fixed point on random expressions") {
    testutil::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        Expression e = rng.expression();
        std::string s = e.str();
        Expression back = parse_expression(s);
        CHECK(back == e);
        CHECK(back.str() == s);
    }
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("x +"), ParseError);
    CHECK_THROWS_AS(parse_expression("(x"), ParseError);
    CHECK_THROWS_AS(parse_expression("z"), ParseError);
    CHECK_THROWS_AS(parse_expression("x ** y"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
    try {
        parse_expression("x + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == mpq_class(3));
    CHECK(parse_rational("-5/10") == mpq_class(-1, 2));
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
