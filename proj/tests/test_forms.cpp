#include <doctest.h>

#include "cartan/forms.hpp"
#include "random_exprs.hpp"

using namespace cartan;
using namespace cartan::ext;

namespace {

OneForm random_one_form(testutil::Rng& rng) {
    OneForm w;
    for (auto& c : w.c) c = rng.expression();
    return w;
}

VectorField random_field(testutil::Rng& rng) {
    VectorField v;
    for (auto& c : v.c) c = rng.expression();
    return v;
}

/// Sparse low-degree polynomial coefficients: inverting a frame of these
/// keeps the determinant denominators small enough for exact arithmetic.
Expression sparse_poly_entry(testutil::Rng& rng) {
    if (rng.integer(0, 2) == 0)
        return Expression(Gaussian(rng.integer(-2, 2)));
    return Expression(RatFun(rng.polynomial(1, 1)));
}

}  // namespace

TEST_CASE("wedge is antisymmetric and bilinear") {
    testutil::Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        OneForm a = random_one_form(rng), b = random_one_form(rng);
        CHECK(wedge(a, b) == Expression(-1) * wedge(b, a));
        CHECK((wedge(a, a)).is_zero());
        Expression f = rng.expression();
        CHECK(wedge(f * a, b) == f * wedge(a, b));
    }
}

TEST_CASE("d o d = 0 on 200 random 1-forms") {
    testutil::Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        // d(f dg) = df ^ dg, and d(df ^ dg) = 0; check ddf = 0 componentwise
        Expression f = rng.expression();
        OneForm df;
        for (int c = 0; c < 5; ++c) df.c[c] = f.derivative(static_cast<Coord>(c));
        CHECK(exterior_derivative(df).is_zero());
    }
}

TEST_CASE("exterior derivative evaluation identity") {
    // d omega(X, Y) = X(omega(Y)) - Y(omega(X)) - omega([X, Y])
    testutil::Rng rng(43);
    for (int t = 0; t < 15; ++t) {
        OneForm w = random_one_form(rng);
        VectorField x = random_field(rng), y = random_field(rng);
        Expression lhs = exterior_derivative(w)(x, y);
        Expression rhs = apply(x, w(y)) - apply(y, w(x)) - w(lie_bracket(x, y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lie bracket satisfies the Jacobi identity") {
    testutil::Rng rng(44);
    for (int t = 0; t < 5; ++t) {
        VectorField x = random_field(rng), y = random_field(rng), z = random_field(rng);
        VectorField j = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                        lie_bracket(z, lie_bracket(x, y));
        CHECK(j.is_zero());
    }
}

TEST_CASE("contraction rule") {
    // X -| (a ^ b) = a(X) b - b(X) a
    testutil::Rng rng(45);
    for (int t = 0; t < 10; ++t) {
        OneForm a = random_one_form(rng), b = random_one_form(rng);
        VectorField x = random_field(rng);
        OneForm lhs = contract(x, wedge(a, b));
        OneForm rhs = a(x) * b - b(x) * a;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matrix inversion round-trips") {
    testutil::Rng rng(46);
    for (int t = 0; t < 5; ++t) {
        std::vector<std::vector<Expression>> m(3, std::vector<Expression>(3));
        for (auto& row : m)
            for (auto& e : row) e = sparse_poly_entry(rng);
        std::vector<std::vector<Expression>> inv;
        try {
            inv = invert_matrix(m);
        } catch (const SingularMatrixError&) {
            continue;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Expression s;
                for (int k = 0; k < 3; ++k) s += m[i][k] * inv[k][j];
                CHECK(s == (i == j ? Expression(1) : Expression()));
            }
    }
    std::vector<std::vector<Expression>> sing(2, std::vector<Expression>(2, Expression(1)));
    CHECK_THROWS_AS(invert_matrix(sing), SingularMatrixError);
}

TEST_CASE("bareiss determinant agrees with cofactor expansion on 2x2") {
    testutil::Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<Expression>> m(2, std::vector<Expression>(2));
        for (auto& row : m)
            for (auto& e : row) e = rng.expression();
        CHECK(determinant(m) == m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    }
}

TEST_CASE("bracket-coframe duality on random frames") {
    // d omega^k = sum_{j<l} T^k_{jl} omega^j ^ omega^l with
    // T^k_{jl} = -omega^k([X_j, X_l]) for the dual frame.
    testutil::Rng rng(48);
    int done = 0;
    while (done < 20) {
        // frame matrix M = L * D * U with unit-triangular L, U and a nonzero
        // constant diagonal D: invertible by construction, and the inverse
        // never leaves the polynomial ring, so the check stays exact-cheap
        // while the coefficients remain genuinely variable
        // the first few frames are triangular (D * U) so that the structure
        // check below, which inverts the coframe matrix as well, keeps
        // constant pivots throughout
        bool triangular = done < 3;
        std::array<std::array<Expression, 5>, 5> lo{}, up{};
        std::array<Expression, 5> diag;
        for (int i = 0; i < 5; ++i) {
            lo[i][i] = Expression(1);
            up[i][i] = Expression(1);
            diag[i] = Expression(Gaussian(rng.integer(0, 1) == 0 ? 1 : -2));
            for (int j = 0; j < i; ++j) {
                lo[i][j] = triangular ? Expression() : sparse_poly_entry(rng);
                up[j][i] = sparse_poly_entry(rng);
            }
        }
        Frame f;
        f.names = {"w1", "w2", "w3", "w4", "w5"};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Expression m;
                for (int k = 0; k < 5; ++k) m += lo[i][k] * diag[k] * up[k][j];
                f.fields[i].c[j] = m;
            }
        Coframe cf = dual_coframe(f, f.names);
        ++done;
        for (int k = 0; k < 5; ++k)
            for (int j = 0; j < 5; ++j)
                CHECK(cf.forms[k](f.fields[j]) == (k == j ? Expression(1) : Expression()));
        if (done > 3) continue;  // the structure check is expensive; sample a few
        StructureTable st = structure_coefficients(cf);
        for (int k = 0; k < 5; ++k)
            for (int j = 0; j < 5; ++j)
                for (int l = j + 1; l < 5; ++l) {
                    Expression direct = -cf.forms[k](lie_bracket(f.fields[j], f.fields[l]));
                    CHECK(st.at(k, j, l) == direct);
                }
    }
}

TEST_CASE("generic rank with certification") {
    VectorField dx = VectorField::basis(Coord::x);
    VectorField dy = VectorField::basis(Coord::y);
    Expression x = Expression::variable(Coord::x);

    RankReport full = generic_rank({dx, dy, x * dx});
    CHECK(full.generic_rank == 2);
    CHECK(full.certified);

    RankReport indep = generic_rank({dx, dy, VectorField::basis(Coord::u1)});
    CHECK(indep.generic_rank == 3);
    CHECK(indep.certified);

    RankReport zero = generic_rank({VectorField{}});
    CHECK(zero.generic_rank == 0);

    // rank is invariant under invertible recombination
    RankReport recomb = generic_rank({dx + dy, dy, x * dx + dy});
    CHECK(recomb.generic_rank == 2);
}
