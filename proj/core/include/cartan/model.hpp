#pragma once

#include "cartan/check.hpp"
#include "cartan/crgeom.hpp"
#include "cartan/reduction.hpp"

namespace cartan::model {

/// Basis order: e_alpha = 0, e_tau = 1, e_sigma = 2, e_rho = 3, e_zeta = 4,
/// e_zetabar = 5.
inline constexpr int kDim = 6;
inline constexpr std::array<const char*, kDim> kBasisNames = {
    "e_alpha", "e_tau", "e_sigma", "e_rho", "e_zeta", "e_zetabar"};

struct LieAlgebra {
    // c[i][j][k]: coefficient of e_k in [e_i, e_j]
    std::array<std::array<std::array<Gaussian, kDim>, kDim>, kDim> c{};

    Gaussian bracket(int i, int j, int k) const { return c[i][j][k]; }
    void set_bracket(int i, int j, int k, const Gaussian& v) {
        c[i][j][k] = v;
        c[j][i][k] = -v;
    }
};

/// Exterior derivative of each dual 1-form: d(omega^k) =
/// sum_{i<j} coeff[k][i][j] omega^i ^ omega^j, with
/// d(omega^k)(X_i, X_j) = -c^k_{ij}.
struct MCStructure {
    std::array<std::array<std::array<Gaussian, kDim>, kDim>, kDim> coeff{};
    Gaussian at(int k, int i, int j) const { return coeff[k][i][j]; }
};

/// The embedded model N: phi1 = x^2 + y^2, phi2 = 2x(x^2 + y^2),
/// phi3 = (x^2 + y^2)((7/2)x^2 - (1/2)y^2).
cr::GraphedManifold model_manifold();

/// The bracket table of aut_CR(N).
LieAlgebra model_algebra();

MCStructure maurer_cartan(const LieAlgebra& g);

/// The final structure-equation template on the section a = 1, populated with
/// a constant InvariantSet (slot 0 carries the Lambda column). Throws
/// std::domain_error when an invariant is not a constant.
MCStructure template_structure(const red::InvariantSet& inv);

/// All 20 triples of the Jacobi identity.
CheckList check_jacobi(const LieAlgebra& g);

/// Conjugation (fix e_alpha..e_rho, swap e_zeta <-> e_zetabar, conjugate
/// scalars) is a Lie-algebra automorphism.
CheckList check_conjugation_automorphism(const LieAlgebra& g);

/// The six displayed Maurer-Cartan equations, slot for slot, plus d^2 = 0.
CheckList maurer_cartan_check(const LieAlgebra& g);

/// ad_{e_alpha} is diagonal with eigenvalues (0, -4, -3, -2, -1, -1).
CheckList check_ad_spectrum(const LieAlgebra& g);

/// The three Cartan-connection axioms on the structure-equation template.
CheckList connection_axiom_check(const MCStructure& st, const LieAlgebra& g);

/// Everything above on the model tables, concatenated.
CheckList verify_model();

}  // namespace cartan::model
