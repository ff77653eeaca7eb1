#pragma once

#include <optional>
#include <string>

#include "cartan/check.hpp"
#include "cartan/forms.hpp"

namespace cartan::cr {

using ext::Coframe;
using ext::Frame;
using ext::StructureTable;
using ext::VectorField;

class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Embedded 5-manifold v_j = phi_j(x, y, u1, u2, u3), j = 1..3.
struct GraphedManifold {
    std::string name;
    std::array<Expression, 3> phi;
    std::optional<Point> base_point;
};

/// The generator of the CR bundle in graph coordinates:
/// L = d/dz + A1 d/du1 + A2 d/du2 + A3 d/du3 with d/dz = (d/dx - i d/dy)/2.
struct CRGenerator {
    VectorField L;
    std::array<Expression, 3> A;
};

/// The frame (L, conj L, T, S, R) with T = i[L, conj L], S = [L, T], R = [L, S].
struct CRFrame {
    VectorField L, Lbar, T, S, R;

    /// Frame ordered (R, S, T, L, Lbar), the dualization order for omega_0.
    Frame as_frame() const;
};

/// The five fundamental functions of the frame decompositions.
struct Fundamentals {
    Expression A, B, E, F, G;
};

/// Verdicts of the four rank conditions defining general class III_2.
struct ClassReport {
    int rank_llt = 0;        // expected 3
    int rank_llts = 0;       // expected 4
    int rank_lltss = 0;      // expected 4, certified identically (degeneracy)
    int rank_lltsr = 0;      // expected 5
    bool degeneracy_certified = false;
    bool member = false;
    std::string first_failure;  // empty when member
};

/// Structure table of omega_0 with the twelve named torsion accessors of the
/// dual-coframe structure equations, plus the pinned-slot verification.
struct TorsionTable {
    StructureTable table;
    // twelve torsion functions, by their slots:
    //   d tau_0:   T (tau^sigma)  Q (tau^rho)  K (tau^zeta)       N (sigma^rho)
    //   d sigma_0: S (tau^sigma)  P (tau^rho)  J (tau^zetabar)    M (sigma^rho)
    //   d rho_0:   R (tau^sigma)  O (tau^rho)  H (tau^zeta)       L (sigma^rho)
    Expression H, J, K, L, M, N, O, P, Q, R, S, T;
    CheckList pinned;
};

/// Solve the tangency system (Id - i Phi_u) A = i phi_z for the generator.
CRGenerator cr_generator(const GraphedManifold& m);

CRFrame derived_frame(const CRGenerator& g);

ClassReport classify(const GraphedManifold& m);
ClassReport classify(const CRFrame& f, const std::optional<Point>& at = std::nullopt);

/// A, B from conj(S) = A T + B S and E, F, G from [L, R] = E T + F S + G R,
/// with residuals and the two relations B conj(B) = 1, conj(A) + conj(B) A = 0
/// certified exactly.
Fundamentals fundamentals(const CRFrame& f);

/// Dual coframe (tau0, sigma0, rho0, zeta0, zetabar0) of (R, S, T, L, Lbar).
Coframe omega0(const CRFrame& f);

/// Structure coefficients of omega0 with pinned slots verified; throws
/// PipelineError when a pinned slot fails.
TorsionTable torsion_table(const CRFrame& f, const Fundamentals& fun);

}  // namespace cartan::cr
