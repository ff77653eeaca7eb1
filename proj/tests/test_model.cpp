#include <doctest.h>

#include "cartan/model.hpp"

using namespace cartan;
using namespace cartan::model;

TEST_CASE("bracket table of aut_CR(N)") {
    LieAlgebra g = model_algebra();
    // [e_alpha, e_tau] = -4 e_tau
    CHECK(g.bracket(0, 1, 1) == Gaussian(-4));
    // antisymmetry
    CHECK(g.bracket(1, 0, 1) == Gaussian(4));
    // [e_tau, e_sigma] = 0
    for (int m = 0; m < kDim; ++m) CHECK(g.bracket(1, 2, m).is_zero());
    // [e_zeta, e_zetabar] = -i e_rho
    CHECK(g.bracket(4, 5, 3) == -Gaussian::i());
    for (int m = 0; m < kDim; ++m)
        if (m != 3) CHECK(g.bracket(4, 5, m).is_zero());
}

TEST_CASE("Jacobi identity holds for all 20 triples") {
    CheckList rep = check_jacobi(model_algebra());
    CHECK(rep.items.size() == 20);
    CHECK(rep.all_ok());
}

TEST_CASE("abelian algebra trivially satisfies Jacobi") {
    LieAlgebra abelian;
    CHECK(check_jacobi(abelian).all_ok());
}

TEST_CASE("negative control: perturbed bracket violates Jacobi") {
    LieAlgebra g = model_algebra();
    g.set_bracket(0, 1, 1, Gaussian(-3));  // [e_alpha, e_tau] = -3 e_tau
    CheckList rep = check_jacobi(g);
    CHECK(!rep.all_ok());
    const Check* bad = rep.first_failure();
    REQUIRE(bad != nullptr);
    // the violation involves e_alpha and the pair producing e_tau
    CHECK(bad->name.find("e_alpha") != std::string::npos);
}

TEST_CASE("conjugation is a Lie-algebra automorphism") {
    CHECK(check_conjugation_automorphism(model_algebra()).all_ok());
}

TEST_CASE("Maurer-Cartan equations match the displayed table and d^2 = 0") {
    CheckList rep = maurer_cartan_check(model_algebra());
    CHECK(rep.all_ok());
    // the display itself, spot-checked: d rho has coefficient i on zeta^zetabar
    MCStructure st = maurer_cartan(model_algebra());
    CHECK(st.at(3, 4, 5) == Gaussian::i());
    CHECK(st.at(1, 0, 1) == Gaussian(4));   // d tau: 4 alpha^tau
    CHECK(st.at(1, 2, 4) == Gaussian(1));   // d tau: sigma^zeta
    CHECK(st.at(2, 0, 2) == Gaussian(3));   // d sigma: 3 alpha^sigma
    CHECK(st.at(2, 3, 4) == Gaussian(1));   // d sigma: rho^zeta
    CHECK(st.at(3, 0, 3) == Gaussian(2));   // d rho: 2 alpha^rho
    CHECK(st.at(4, 0, 4) == Gaussian(1));   // d zeta: alpha^zeta
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) CHECK(st.at(0, i, j).is_zero());  // d alpha = 0
}

TEST_CASE("negative control: perturbed constants break d^2 = 0") {
    LieAlgebra g = model_algebra();
    g.set_bracket(3, 4, 2, Gaussian(-2));  // [e_rho, e_zeta] = -2 e_sigma
    CheckList rep = maurer_cartan_check(g);
    bool dd_failed = false;
    for (const auto& c : rep.items)
        if (c.name == "d^2 = 0" && !c.ok) dd_failed = true;
    CHECK(dd_failed);
}

TEST_CASE("ad_{e_alpha} spectrum is (0, -4, -3, -2, -1, -1)") {
    CheckList rep = check_ad_spectrum(model_algebra());
    CHECK(rep.items.size() == 6);
    CHECK(rep.all_ok());
}

TEST_CASE("Cartan-connection axioms on the model") {
    LieAlgebra g = model_algebra();
    CheckList rep = connection_axiom_check(maurer_cartan(g), g);
    CHECK(rep.all_ok());
}

TEST_CASE("the P5 template with zero invariants equals the model MC structure") {
    red::InvariantSet zeros;
    MCStructure tpl = template_structure(zeros);
    MCStructure mc = maurer_cartan(model_algebra());
    for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
            for (int j = i + 1; j < kDim; ++j) CHECK(tpl.coeff[k][i][j] == mc.coeff[k][i][j]);
    LieAlgebra g = model_algebra();
    CHECK(connection_axiom_check(tpl, g).all_ok());
}

TEST_CASE("negative control: [e_alpha, e_rho] = -e_rho fails axiom 2 at the rho slot") {
    LieAlgebra g = model_algebra();
    MCStructure st = maurer_cartan(g);  // keep the structure, break the algebra
    g.set_bracket(0, 3, 3, Gaussian(-1));
    CheckList rep = connection_axiom_check(st, g);
    CHECK(!rep.all_ok());
    const Check* bad = rep.first_failure();
    REQUIRE(bad != nullptr);
    CHECK(bad->name.find("e_rho") != std::string::npos);
}

TEST_CASE("template_structure requires constant invariants") {
    red::InvariantSet inv;
    inv.I(5) = Expression::variable(Coord::x);
    CHECK_THROWS_AS(template_structure(inv), std::domain_error);
}

TEST_CASE("verify_model aggregates all suites green") {
    CheckList all = verify_model();
    CHECK(all.all_ok());
    CHECK(all.items.size() > 30);
}
