#include <doctest.h>

#include "cartan/parser.hpp"
#include "random_exprs.hpp"

using namespace cartan;

namespace {

/// Registers x as the radical base is invalid (|B| != 1); a valid non-constant
/// unit-modulus base is B = (1 + i x)/(1 - i x).
Expression unit_modulus_base() {
    Expression x = Expression::variable(Coord::x);
    Expression i = Expression::i();
    return (Expression(1) + i * x) / (Expression(1) - i * x);
}

struct RadicalGuard {
    ~RadicalGuard() { RadicalRegistry::clear(); }
};

}  // namespace

TEST_CASE("field operations and canonical equality") {
    testutil::Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        Expression a = rng.expression(), b = rng.expression();
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a - a == Expression());
    }
}

TEST_CASE("normalize is idempotent on 1000 randomized expressions") {
    testutil::Rng rng(22);
    for (int t = 0; t < 1000; ++t) {
        Expression e = rng.expression();
        CHECK(normalize(e) == e);
        CHECK(normalize(normalize(e)) == normalize(e));
    }
}

TEST_CASE("Leibniz rule for differentiate") {
    testutil::Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        Expression a = rng.expression(), b = rng.expression();
        Coord c = static_cast<Coord>(rng.integer(0, 4));
        Expression res = differentiate(a * b, c) -
                         (differentiate(a, c) * b + a * differentiate(b, c));
        CHECK(is_zero(res));
    }
}

TEST_CASE("conjugation is an involution on 200 random expressions") {
    testutil::Rng rng(24);
    for (int t = 0; t < 200; ++t) {
        Expression e = rng.expression();
        CHECK(conjugate(conjugate(e)) == e);
    }
}

TEST_CASE("evaluate commutes with normalize at random non-pole points") {
    testutil::Rng rng(25);
    int done = 0;
    while (done < 20) {
        Expression e = rng.expression();
        Point p = rng.point();
        try {
            Gaussian v = e.evaluate(p);
            CHECK(normalize(e).evaluate(p) == v);
            ++done;
        } catch (const std::domain_error&) {
            // pole; draw again
        }
    }
}

TEST_CASE("registration rejects a base that is not unit-modulus") {
    RadicalGuard guard;
    CHECK_THROWS_AS(RadicalRegistry::register_radical(Expression::variable(Coord::x)),
                    RadicalError);
}

TEST_CASE("radical rules: beta^2 = B, conj(beta) = conj(B) beta, branch collapse") {
    RadicalGuard guard;
    Expression b = unit_modulus_base();
    RadicalRegistry::register_radical(b);
    Expression beta = Expression::sqrt_radical();

    CHECK(beta * beta == b);
    CHECK(beta.conj() == b.conj() * beta);
    CHECK(beta * beta.conj() == Expression(1));  // |beta|^2 = |B| = 1
    CHECK(beta.inverse() == b.conj() * beta);
    CHECK(beta.pow(3) == b * beta);
    CHECK(beta.pow(-2) == b.inverse());
}

TEST_CASE("d(beta) = B'/(2B) beta") {
    RadicalGuard guard;
    Expression b = unit_modulus_base();
    RadicalRegistry::register_radical(b);
    Expression beta = Expression::sqrt_radical();
    Expression lhs = beta.derivative(Coord::x);
    Expression rhs = b.derivative(Coord::x) / (Expression(2) * b) * beta;
    CHECK(lhs == rhs);
    // (beta^2)' = B' via Leibniz on the radical
    CHECK(beta.derivative(Coord::x) * beta * Expression(2) == b.derivative(Coord::x));
}

TEST_CASE("constant square base collapses into the plain field") {
    RadicalGuard guard;
    RadicalRegistry::register_radical(Expression(1));
    Expression beta = Expression::sqrt_radical();
    CHECK(beta == Expression(1));
    CHECK(!beta.has_radical());

    RadicalRegistry::clear();
    RadicalRegistry::register_radical(Expression(-1));
    beta = Expression::sqrt_radical();
    CHECK(beta == Expression::i());
}

TEST_CASE("numeric evaluation of the radical honours the branch flag") {
    RadicalGuard guard;
    Expression b = unit_modulus_base();
    RadicalRegistry::register_radical(b);
    Expression beta = Expression::sqrt_radical();
    // at x = 0: B = 1, beta = +-1
    Point origin{};
    CHECK(beta.evaluate(origin, SqrtBranch::principal) == Gaussian(1));
    CHECK(beta.evaluate(origin, SqrtBranch::negated) == Gaussian(-1));
    // branch-independent combination
    Expression inv = beta * beta;
    CHECK(inv.evaluate(origin, SqrtBranch::principal) ==
          inv.evaluate(origin, SqrtBranch::negated));
}
