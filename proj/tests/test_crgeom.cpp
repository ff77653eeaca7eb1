#include <doctest.h>

#include "cartan/model.hpp"
#include "cartan/parser.hpp"

using namespace cartan;

namespace {

cr::GraphedManifold manifold(const char* name, const char* p1, const char* p2, const char* p3) {
    cr::GraphedManifold m;
    m.name = name;
    m.phi = {parse_expression(p1), parse_expression(p2), parse_expression(p3)};
    return m;
}

}  // namespace

TEST_CASE("tangency: L annihilates the defining functions") {
    cr::GraphedManifold m = model::model_manifold();
    cr::CRGenerator g = cr::cr_generator(m);
    Expression i = Expression::i();
    for (int j = 0; j < 3; ++j) {
        Expression uj = Expression::variable(static_cast<Coord>(j + 2));
        CHECK(ext::apply(g.L, uj - i * m.phi[j]).is_zero());
    }
    CHECK(g.L.c[0] == Expression(Gaussian(mpq_class(1, 2))));
    CHECK(g.L.c[1] == Expression(Gaussian(mpq_class(0), mpq_class(-1, 2))));
}

TEST_CASE("non-real graphing function is rejected") {
    cr::GraphedManifold m = manifold("bad", "x^2", "0", "0");
    m.phi[1] = Expression::i() * Expression::variable(Coord::x);
    CHECK_THROWS_AS(cr::cr_generator(m), cr::PipelineError);
}

TEST_CASE("model classification: ranks (3, 4, 4, 5), degeneracy certified") {
    cr::ClassReport rep = cr::classify(model::model_manifold());
    CHECK(rep.rank_llt == 3);
    CHECK(rep.rank_llts == 4);
    CHECK(rep.rank_lltss == 4);
    CHECK(rep.rank_lltsr == 5);
    CHECK(rep.degeneracy_certified);
    CHECK(rep.member);
    CHECK(rep.first_failure.empty());
}

TEST_CASE("negative control: flat graph fails the first rank condition") {
    cr::ClassReport rep = cr::classify(manifold("flat", "0", "0", "0"));
    CHECK(!rep.member);
    CHECK(rep.rank_llt < 3);
    CHECK(rep.first_failure == "rank(L, Lbar, T) = 3");
}

TEST_CASE("negative control: Heisenberg-like graph fails at S") {
    cr::ClassReport rep = cr::classify(manifold("sphere-like", "x^2 + y^2", "0", "0"));
    CHECK(!rep.member);
    CHECK(rep.rank_llt == 3);
    CHECK(rep.rank_llts < 4);
    CHECK(rep.first_failure.substr(0, 23) == "rank(L, Lbar, T, S) = 4");
}

TEST_CASE("negative control: model with phi3 = 0 fails the last condition") {
    cr::ClassReport rep =
        cr::classify(manifold("model-degenerate", "x^2 + y^2", "2*x^3 + 2*x*y^2", "0"));
    CHECK(!rep.member);
    CHECK(rep.first_failure == "rank(L, Lbar, T, S, R) = 5");
}

TEST_CASE("fundamentals of the model: A = 0, B = 1, E = F = G = 0") {
    cr::CRFrame f = cr::derived_frame(cr::cr_generator(model::model_manifold()));
    cr::Fundamentals fun = cr::fundamentals(f);
    CHECK(fun.A.is_zero());
    CHECK(fun.B == Expression(1));
    CHECK(fun.E.is_zero());
    CHECK(fun.F.is_zero());
    CHECK(fun.G.is_zero());
    // certified relations
    CHECK((fun.B * fun.B.conj() - Expression(1)).is_zero());
    CHECK((fun.A.conj() + fun.B.conj() * fun.A).is_zero());
    // decomposition residuals
    CHECK(f.S.conj() == fun.A * f.T + fun.B * f.S);
    ext::VectorField lr = ext::lie_bracket(f.L, f.R);
    CHECK(lr == fun.E * f.T + fun.F * f.S + fun.G * f.R);
}

TEST_CASE("omega0 pinned slots and torsions on the model") {
    cr::CRFrame f = cr::derived_frame(cr::cr_generator(model::model_manifold()));
    cr::Fundamentals fun = cr::fundamentals(f);
    cr::TorsionTable tt = cr::torsion_table(f, fun);
    CHECK(tt.pinned.all_ok());
    for (const Expression* e : {&tt.H, &tt.J, &tt.K, &tt.L, &tt.M, &tt.N, &tt.O, &tt.P, &tt.Q,
                                &tt.R, &tt.S, &tt.T})
        CHECK(e->is_zero());
    // spot-check the pinned values directly
    CHECK(tt.table.at(0, 1, 3) == Expression(1));
    CHECK(tt.table.at(0, 1, 4) == fun.B);
    CHECK(tt.table.at(2, 3, 4) == Expression::i());
}

TEST_CASE("T = i[L, Lbar] is real on any real graph") {
    cr::CRFrame f = cr::derived_frame(
        cr::cr_generator(manifold("gen", "x^2 + y^2 + u1*x", "2*x^3", "x*y")));
    CHECK(f.T.conj() == f.T);
}
