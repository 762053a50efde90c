#pragma once

#include "lbie/solver.hpp"

namespace lbie {

/// F = grad alpha + n x grad beta + harmonic, all tangent fields at the nodes.
struct HodgeResult {
    TangentField grad_alpha;
    TangentField nx_grad_beta;
    TangentField harmonic;
    SurfaceDensity alpha;
    SurfaceDensity beta;
    /// ||div_Gamma harmonic|| and ||div_Gamma (n x harmonic)|| by spectral
    /// differentiation.
    double div_harmonic = 0.0;
    double div_nx_harmonic = 0.0;
    SolveReport alpha_report;
    SolveReport beta_report;
};

/// Decompose F given div_Gamma F and div_Gamma (n x F), typically computed
/// analytically from a volume field (see tangential_rhs). Solves
/// Delta alpha = div F and Delta beta = -div (n x F) on `system`.
HodgeResult hodge_decompose(LaplaceBeltramiSystem& system, const TangentField& F,
                            const SurfaceDensity& div_F, const SurfaceDensity& div_nxF,
                            const SolverConfig& cfg = {});

/// As above, with both divergences from spectral differentiation of F.
HodgeResult hodge_decompose(LaplaceBeltramiSystem& system, const TangentField& F,
                            const SolverConfig& cfg = {});

}  // namespace lbie
