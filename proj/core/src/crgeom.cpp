#include "cartan/crgeom.hpp"

namespace cartan::cr {

namespace {

const Expression kHalf = Expression(Gaussian(mpq_class(1, 2)));
const Expression kI = Expression::i();

Expression du(const Expression& f, int j) { return f.derivative(static_cast<Coord>(j + 2)); }

}  // namespace

Frame CRFrame::as_frame() const {
    Frame f;
    f.fields = {R, S, T, L, Lbar};
    f.names = {"R", "S", "T", "L", "Lbar"};
    return f;
}

CRGenerator cr_generator(const GraphedManifold& m) {
    for (int j = 0; j < 3; ++j) {
        if (m.phi[j].conj() != m.phi[j])
            throw PipelineError("graphing function phi" + std::to_string(j + 1) + " is not real");
    }

    // (Id - i Phi_u) A = i phi_z with phi_z = (phi_x - i phi_y)/2
    std::vector<std::vector<Expression>> sys(3, std::vector<Expression>(3));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            sys[j][k] = -kI * du(m.phi[j], k);
            if (j == k) sys[j][k] += Expression(1);
        }
    std::array<Expression, 3> rhs;
    for (int j = 0; j < 3; ++j)
        rhs[j] = kI * kHalf * (m.phi[j].derivative(Coord::x) - kI * m.phi[j].derivative(Coord::y));

    std::vector<std::vector<Expression>> inv;
    try {
        inv = ext::invert_matrix(sys);
    } catch (const ext::SingularMatrixError&) {
        throw PipelineError("singular tangency system: manifold is not a graph of the assumed form");
    }

    CRGenerator g;
    for (int j = 0; j < 3; ++j) {
        Expression a;
        for (int k = 0; k < 3; ++k) a += inv[j][k] * rhs[k];
        g.A[j] = a;
    }
    g.L.c[0] = kHalf;
    g.L.c[1] = -kI * kHalf;
    for (int j = 0; j < 3; ++j) g.L.c[j + 2] = g.A[j];

    // tangency certificate: L(u_j - i phi_j) = 0
    for (int j = 0; j < 3; ++j) {
        Expression uj = Expression::variable(static_cast<Coord>(j + 2));
        Expression res = ext::apply(g.L, uj - kI * m.phi[j]);
        if (!res.is_zero())
            throw PipelineError("tangency residual nonzero for u" + std::to_string(j + 1) + ": " +
                                res.str());
    }
    return g;
}

CRFrame derived_frame(const CRGenerator& g) {
    CRFrame f;
    f.L = g.L;
    f.Lbar = g.L.conj();
    f.T = kI * ext::lie_bracket(f.L, f.Lbar);
    f.S = ext::lie_bracket(f.L, f.T);
    f.R = ext::lie_bracket(f.L, f.S);
    if (!(f.T.conj() == f.T)) throw PipelineError("T = i[L, Lbar] failed its reality check");
    return f;
}

ClassReport classify(const GraphedManifold& m) {
    CRFrame f = derived_frame(cr_generator(m));
    return classify(f, m.base_point);
}

ClassReport classify(const CRFrame& f, const std::optional<Point>& at) {
    ClassReport rep;
    auto rank_of = [&](const std::vector<VectorField>& v) {
        return ext::generic_rank(v, at).generic_rank;
    };
    rep.rank_llt = rank_of({f.L, f.Lbar, f.T});
    if (rep.rank_llt != 3) {
        rep.first_failure = "rank(L, Lbar, T) = 3";
        return rep;
    }
    rep.rank_llts = rank_of({f.L, f.Lbar, f.T, f.S});
    if (rep.rank_llts != 4) {
        rep.first_failure = f.S.is_zero() ? "rank(L, Lbar, T, S) = 4 (S is identically zero)"
                                          : "rank(L, Lbar, T, S) = 4";
        return rep;
    }
    // degeneracy: the 5x5 determinant of (L, Lbar, T, S, conj S) vanishes identically
    std::vector<VectorField> five = {f.L, f.Lbar, f.T, f.S, f.S.conj()};
    std::vector<std::vector<Expression>> m5(5, std::vector<Expression>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m5[i][j] = five[i].c[j];
    Expression det = ext::determinant(m5);
    rep.degeneracy_certified = det.is_zero();
    rep.rank_lltss = rep.degeneracy_certified ? 4 : 5;
    if (!rep.degeneracy_certified) {
        rep.first_failure = "rank(L, Lbar, T, S, Sbar) = 4 (degeneracy identity)";
        return rep;
    }
    rep.rank_lltsr = rank_of({f.L, f.Lbar, f.T, f.S, f.R});
    if (rep.rank_lltsr != 5) {
        rep.first_failure = "rank(L, Lbar, T, S, R) = 5";
        return rep;
    }
    rep.member = true;
    return rep;
}

namespace {

/// Solve sum_k coeff_k fields_k = target exactly. The fields live in the
/// du-span (three components), so an invertible n-row subsystem of the three
/// u-rows is picked and the full five-component residual certified afterwards.
std::vector<Expression> solve_in_span(const std::vector<VectorField>& fields,
                                      const VectorField& target, const std::string& what) {
    const int n = static_cast<int>(fields.size());
    std::vector<std::vector<int>> rowsets;
    {
        std::vector<int> idx(n);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == n) {
                rowsets.push_back(idx);
                return;
            }
            for (int a = start; a < 3; ++a) {
                idx[depth] = a + 2;
                self(self, a + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    for (const auto& rows : rowsets) {
        std::vector<std::vector<Expression>> m(n, std::vector<Expression>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = fields[j].c[rows[i]];
        std::vector<std::vector<Expression>> inv;
        try {
            inv = ext::invert_matrix(std::move(m));
        } catch (const ext::SingularMatrixError&) {
            continue;
        }
        std::vector<Expression> sol(n);
        for (int j = 0; j < n; ++j) {
            Expression s;
            for (int i = 0; i < n; ++i) s += inv[j][i] * target.c[rows[i]];
            sol[j] = s;
        }
        VectorField res = target;
        for (int j = 0; j < n; ++j) res = res - sol[j] * fields[j];
        if (!res.is_zero()) throw PipelineError(what + ": decomposition residual nonzero");
        return sol;
    }
    throw PipelineError(what + ": no nonsingular subsystem (decomposition inconsistent)");
}

}  // namespace

Fundamentals fundamentals(const CRFrame& f) {
    Fundamentals fun;
    {
        auto ab = solve_in_span({f.T, f.S}, f.S.conj(), "Sbar = A T + B S");
        fun.A = ab[0];
        fun.B = ab[1];
    }
    {
        auto efg = solve_in_span({f.T, f.S, f.R}, ext::lie_bracket(f.L, f.R),
                                 "[L, R] = E T + F S + G R");
        fun.E = efg[0];
        fun.F = efg[1];
        fun.G = efg[2];
    }
    Expression r1 = fun.B * fun.B.conj() - Expression(1);
    if (!r1.is_zero()) throw PipelineError("relation B conj(B) = 1 failed: " + r1.str());
    Expression r2 = fun.A.conj() + fun.B.conj() * fun.A;
    if (!r2.is_zero()) throw PipelineError("relation conj(A) + conj(B) A = 0 failed: " + r2.str());
    return fun;
}

Coframe omega0(const CRFrame& f) {
    return ext::dual_coframe(f.as_frame(), {"tau0", "sigma0", "rho0", "zeta0", "zetabar0"});
}

TorsionTable torsion_table(const CRFrame& f, const Fundamentals& fun) {
    Coframe w0 = omega0(f);
    TorsionTable tt;
    tt.table = ext::structure_coefficients(w0);
    const auto& st = tt.table;

    // basis order tau0=0, sigma0=1, rho0=2, zeta0=3, zetabar0=4
    tt.T = st.at(0, 0, 1);
    tt.Q = st.at(0, 0, 2);
    tt.K = st.at(0, 0, 3);
    tt.N = st.at(0, 1, 2);
    tt.S = st.at(1, 0, 1);
    tt.P = st.at(1, 0, 2);
    tt.J = st.at(1, 0, 4);
    tt.M = st.at(1, 1, 2);
    tt.R = st.at(2, 0, 1);
    tt.O = st.at(2, 0, 2);
    tt.H = st.at(2, 0, 3);
    tt.L = st.at(2, 1, 2);

    auto pin = [&](const char* name, const Expression& actual, const Expression& expect) {
        Expression res = actual - expect;
        tt.pinned.add(name, res.is_zero(), res.is_zero() ? "" : res.str());
    };
    pin("dtau0[sigma0^zeta0] = 1", st.at(0, 1, 3), Expression(1));
    pin("dtau0[sigma0^zetabar0] = B", st.at(0, 1, 4), fun.B);
    pin("dsigma0[rho0^zeta0] = 1", st.at(1, 2, 3), Expression(1));
    pin("dsigma0[rho0^zetabar0] = B", st.at(1, 2, 4), fun.B);
    pin("drho0[rho0^zetabar0] = A", st.at(2, 2, 4), fun.A);
    pin("drho0[zeta0^zetabar0] = i", st.at(2, 3, 4), Expression::i());
    bool dz = ext::exterior_derivative(w0.forms[3]).is_zero();
    bool dzb = ext::exterior_derivative(w0.forms[4]).is_zero();
    tt.pinned.add("dzeta0 = 0", dz);
    tt.pinned.add("dzetabar0 = 0", dzb);

    if (!tt.pinned.all_ok()) {
        const Check* c = tt.pinned.first_failure();
        throw PipelineError("pinned torsion slot failed: " + c->name +
                            (c->detail.empty() ? "" : " (residual " + c->detail + ")"));
    }
    return tt;
}

}  // namespace cartan::cr
