#include "lbie/hodge.hpp"

namespace lbie {

HodgeResult hodge_decompose(LaplaceBeltramiSystem& system, const TangentField& F,
                            const SurfaceDensity& div_F, const SurfaceDensity& div_nxF,
                            const SolverConfig& cfg)
{
    const SurfaceMesh& mesh = system.mesh();
    if (F.cols() != mesh.n_pts() || div_F.size() != mesh.n_pts() || div_nxF.size() != mesh.n_pts())
        throw ContractError("hodge_decompose: field sizes do not match the mesh");
    const double tangency = (mesh.normals().array() * F.array()).colwise().sum().abs().maxCoeff();
    if (tangency > 1e-10 * F.colwise().norm().maxCoeff())
        throw ContractError("hodge_decompose: F is not tangential");

    HodgeResult r;
    r.alpha_report = system.solve(div_F, cfg);
    r.beta_report = system.solve(-div_nxF, cfg);
    r.alpha = r.alpha_report.psi;
    r.beta = r.beta_report.psi;
    r.grad_alpha = surface_gradient(mesh, r.alpha);
    r.nx_grad_beta = cross_normal(mesh, surface_gradient(mesh, r.beta));
    r.harmonic = F - r.grad_alpha - r.nx_grad_beta;
    // the difference is tangential only to rounding, which is not small next to a tiny remainder
    for (Index k = 0; k < r.harmonic.cols(); ++k)
        r.harmonic.col(k) -= mesh.normals().col(k).dot(r.harmonic.col(k)) * mesh.normals().col(k);
    r.div_harmonic = l2_surface_norm(mesh, surface_divergence(mesh, r.harmonic));
    r.div_nx_harmonic = l2_surface_norm(mesh, surface_divergence(mesh, cross_normal(mesh, r.harmonic)));
    return r;
}

HodgeResult hodge_decompose(LaplaceBeltramiSystem& system, const TangentField& F,
                            const SolverConfig& cfg)
{
    const SurfaceMesh& mesh = system.mesh();
    return hodge_decompose(system, F, surface_divergence(mesh, F),
                           surface_divergence(mesh, cross_normal(mesh, F)), cfg);
}

}  // namespace lbie
