#pragma once

#include "cartan/check.hpp"
#include "cartan/crgeom.hpp"

namespace cartan::red {

using cr::CRFrame;
using cr::Fundamentals;
using cr::TorsionTable;
using ext::Coframe;

class ExtractionError : public std::runtime_error {
public:
    ExtractionError(const std::string& slot, const std::string& residual)
        : std::runtime_error("required slot failed: " + slot + " (residual " + residual + ")"),
          slot_(slot),
          residual_(residual) {}
    const std::string& slot() const { return slot_; }
    const std::string& residual() const { return residual_; }

private:
    std::string slot_, residual_;
};

/// The six normalization functions produced by the cascade.
struct NormalizationSet {
    Expression B0, C0, F0, D0, G0, H0;
};

/// The fifteen biholomorphic invariants, 1-indexed through I(n).
struct InvariantSet {
    std::array<Expression, 15> v{};
    const Expression& I(int n) const { return v[n - 1]; }
    Expression& I(int n) { return v[n - 1]; }
    bool all_zero() const;
};

/// Base-form coefficients of the modified Maurer-Cartan form on the section
/// a = 1: Lambda = -(X_tau tau + X_sigma sigma + X_rho rho + X_zeta zeta
/// + X_zetabar zetabar).
struct LambdaCoefficients {
    Expression X_tau, X_sigma, X_rho, X_zeta, X_zetabar;
};

/// omega_1 = (tau0/B, sigma0/B^(1/2), rho0, zeta0/B^(1/2), conj); requires the
/// radical for B to be registered.
Coframe stage1_coframe(const Fundamentals& fun, const Coframe& w0);

struct Stage2Result {
    Expression B0, C0, F0;
    Coframe w2;
};
Stage2Result stage2(const CRFrame& f, const Fundamentals& fun, const TorsionTable& tt,
                    const Coframe& w1);

/// The closed-form first invariant.
Expression invariant_I1_closed_form(const CRFrame& f, const Fundamentals& fun,
                                    const TorsionTable& tt);

struct Stage3Result {
    Expression D0, G0;
    Coframe w3;
};
Stage3Result stage3(const CRFrame& f, const Fundamentals& fun, const TorsionTable& tt,
                    const Stage2Result& s2);

struct Stage4Result {
    Expression H0;
    Coframe w4;
};
Stage4Result stage4(const CRFrame& f, const Fundamentals& fun, const Stage2Result& s2,
                    const Stage3Result& s3);

struct Extraction {
    InvariantSet inv;
    LambdaCoefficients lambda;
    CheckList consistency;
};

/// Slot-by-slot solve of the final structure-equation template; throws
/// ExtractionError when a required fixed slot or the X_zeta agreement fails.
Extraction extract_invariants(const Coframe& w4);

/// The displayed conjugate pairings and d(conj zeta) = conj(d zeta).
CheckList conjugation_audit(const Coframe& w4, const InvariantSet& inv);

/// Whole cascade: registers the radical for B, runs the four stages and the
/// extraction, and performs the conjugation audit.
struct ReductionResult {
    NormalizationSet norms;
    InvariantSet inv;
    LambdaCoefficients lambda;
    CheckList consistency;
    CheckList conjugation;
    Expression I1_closed;
    Coframe w4;
};
ReductionResult run_reduction(const CRFrame& f, const Fundamentals& fun, const TorsionTable& tt);

}  // namespace cartan::red
