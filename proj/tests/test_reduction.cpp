#include <doctest.h>

#include "cartan/model.hpp"
#include "cartan/parser.hpp"

using namespace cartan;

namespace {

struct ModelPipeline {
    cr::CRFrame f;
    cr::Fundamentals fun;
    cr::TorsionTable tt;

    ModelPipeline() {
        RadicalRegistry::clear();
        f = cr::derived_frame(cr::cr_generator(model::model_manifold()));
        fun = cr::fundamentals(f);
        tt = cr::torsion_table(f, fun);
    }
    ~ModelPipeline() { RadicalRegistry::clear(); }
};

}  // namespace

TEST_CASE("golden values: the model cascade vanishes identically") {
    ModelPipeline p;
    red::ReductionResult r = red::run_reduction(p.f, p.fun, p.tt);

    // normalization functions (frozen after first verified run)
    CHECK(r.norms.B0.is_zero());
    CHECK(r.norms.C0.is_zero());
    CHECK(r.norms.F0.is_zero());
    CHECK(r.norms.D0.is_zero());
    CHECK(r.norms.G0.is_zero());
    CHECK(r.norms.H0.is_zero());

    // all fifteen invariants vanish identically
    CHECK(r.inv.all_zero());
    for (int n = 1; n <= 15; ++n) CHECK(r.inv.I(n).str() == "0");

    // Lambda decontamination is trivial on the model
    CHECK(r.lambda.X_tau.is_zero());
    CHECK(r.lambda.X_sigma.is_zero());
    CHECK(r.lambda.X_rho.is_zero());
    CHECK(r.lambda.X_zeta.is_zero());
    CHECK(r.lambda.X_zetabar.is_zero());

    CHECK(r.I1_closed.is_zero());
    CHECK(r.consistency.all_ok());
    CHECK(r.conjugation.all_ok());
}

TEST_CASE("omega4 of the model reproduces the simplified structure equations") {
    ModelPipeline p;
    red::ReductionResult r = red::run_reduction(p.f, p.fun, p.tt);
    ext::StructureTable st = ext::structure_coefficients(r.w4);
    // d tau = sigma^zeta + sigma^zetabar
    for (int j = 0; j < 5; ++j)
        for (int l = j + 1; l < 5; ++l) {
            Expression want;
            if (j == 1 && (l == 3 || l == 4)) want = Expression(1);
            CHECK(st.at(0, j, l) == want);
        }
    // d sigma = rho^zeta + rho^zetabar
    for (int j = 0; j < 5; ++j)
        for (int l = j + 1; l < 5; ++l) {
            Expression want;
            if (j == 2 && (l == 3 || l == 4)) want = Expression(1);
            CHECK(st.at(1, j, l) == want);
        }
    // d rho = i zeta^zetabar
    for (int j = 0; j < 5; ++j)
        for (int l = j + 1; l < 5; ++l) {
            Expression want;
            if (j == 3 && l == 4) want = Expression::i();
            CHECK(st.at(2, j, l) == want);
        }
    // d zeta = d zetabar = 0
    for (int k = 3; k < 5; ++k)
        for (int idx = 0; idx < 10; ++idx) CHECK(st.coeff[k][idx].is_zero());
}

TEST_CASE("stagewise coframe realities") {
    ModelPipeline p;
    RadicalRegistry::register_radical(p.fun.B);
    ext::Coframe w0 = cr::omega0(p.f);
    ext::Coframe w1 = red::stage1_coframe(p.fun, w0);
    CHECK(w1.forms[0].conj() == w1.forms[0]);  // tau1 real
    red::Stage2Result s2 = red::stage2(p.f, p.fun, p.tt, w1);
    CHECK(w1.forms[4] == w1.forms[3].conj());
    CHECK(s2.w2.forms[1].conj() == s2.w2.forms[1]);  // sigma2 real
    red::Stage3Result s3 = red::stage3(p.f, p.fun, p.tt, s2);
    red::Stage4Result s4 = red::stage4(p.f, p.fun, s2, s3);
    CHECK(s4.w4.forms[0].conj() == s4.w4.forms[0]);  // tau real
    CHECK(s4.w4.forms[1].conj() == s4.w4.forms[1]);  // sigma real
    CHECK(s4.w4.forms[2].conj() == s4.w4.forms[2]);  // rho real
    CHECK(s4.w4.forms[4] == s4.w4.forms[3].conj());
}

TEST_CASE("extracted I1 equals the closed form on the model") {
    ModelPipeline p;
    red::ReductionResult r = red::run_reduction(p.f, p.fun, p.tt);
    Expression closed = red::invariant_I1_closed_form(p.f, p.fun, p.tt);
    CHECK(r.inv.I(1) == closed);
}

TEST_CASE("closed-form I1 on a synthetic fundamentals fixture") {
    // Exercise the radical path with a non-constant unit-modulus B.
    RadicalRegistry::clear();
    cr::CRFrame f;
    f.L.c[0] = Expression(Gaussian(mpq_class(1, 2)));
    f.L.c[1] = Expression(Gaussian(mpq_class(0), mpq_class(-1, 2)));
    f.Lbar = f.L.conj();
    cr::Fundamentals fun;
    Expression x = Expression::variable(Coord::x);
    Expression i = Expression::i();
    fun.A = parse_expression("x*y");
    fun.B = (Expression(1) + i * x) / (Expression(1) - i * x);
    fun.G = parse_expression("u1");
    RadicalRegistry::register_radical(fun.B);
    cr::TorsionTable tt;
    tt.K = parse_expression("y");

    Expression beta = Expression::sqrt_radical();
    Expression isq = beta / fun.B;
    Expression lb = ext::apply(f.L, fun.B), lbb = ext::apply(f.Lbar, fun.B);
    Expression half(Gaussian(mpq_class(1, 2)));
    Expression expect = half * lb / fun.B +
                        Expression(Gaussian(mpq_class(3, 10))) * beta * fun.G -
                        Expression(Gaussian(mpq_class(1, 10))) * lbb * isq / fun.B +
                        Expression(Gaussian(mpq_class(2, 5))) * fun.A * isq -
                        Expression(Gaussian(mpq_class(3, 10))) * tt.K * isq;
    CHECK(red::invariant_I1_closed_form(f, fun, tt) == expect);
    CHECK(!red::invariant_I1_closed_form(f, fun, tt).is_zero());
    RadicalRegistry::clear();
}

TEST_CASE("extraction rejects a coframe violating a required slot") {
    ModelPipeline p;
    red::ReductionResult r = red::run_reduction(p.f, p.fun, p.tt);
    ext::Coframe broken = r.w4;
    // scaling tau breaks the fixed slot dtau[sigma^zeta] = 1
    broken.forms[0] = Expression(2) * broken.forms[0];
    CHECK_THROWS_AS(red::extract_invariants(broken), red::ExtractionError);
}

TEST_CASE("conjugation audit fails on a coframe with non-conjugate zeta slots") {
    ModelPipeline p;
    red::ReductionResult r = red::run_reduction(p.f, p.fun, p.tt);
    ext::Coframe broken = r.w4;
    // replace zetabar by something that is not conj(zeta)
    broken.forms[4] = broken.forms[4] + Expression::i() * broken.forms[2];
    red::InvariantSet inv;  // zeros
    CheckList audit = red::conjugation_audit(broken, inv);
    CHECK(!audit.all_ok());
}
