#include "lbie/analytic.hpp"
#include "lbie/hodge.hpp"

#include <doctest.h>

#include <cmath>

using namespace lbie;

namespace {

// V = grad(x z): on the unit sphere x z is a degree-2 harmonic, proportional to Re Y_2^1.
VectorField gradient_of_xz()
{
    return {[](const Vector3d& x) { return Vector3d(x[2], 0, x[0]); },
            [](const Vector3d&) {
                Matrix3d J = Matrix3d::Zero();
                J(0, 2) = J(2, 0) = 1.0;
                return J;
            }};
}

void normalize(const SurfaceMesh& mesh, TangentialRhs& rhs)
{
    const double s = 1.0 / l2_surface_norm(mesh, rhs.F);
    rhs.F *= s;
    rhs.div_F *= s;
    rhs.div_nxF *= s;
}

}  // namespace

TEST_CASE("hodge decomposition on the sphere")
{
    const SurfaceMesh mesh = sphere_mesh(0, 6);
    LaplaceBeltramiSystem system(mesh);

    SUBCASE("pure gradient")
    {
        TangentialRhs rhs = tangential_rhs(mesh, gradient_of_xz());
        const double s = 1.0 / l2_surface_norm(mesh, rhs.F);
        normalize(mesh, rhs);
        const HodgeResult h = hodge_decompose(system, rhs.F, rhs.div_F, rhs.div_nxF);
        const VectorXd xz = s * mesh.positions().row(0).cwiseProduct(mesh.positions().row(2)).transpose();
        const VectorXd shift = VectorXd::Constant(mesh.n_pts(), weighted_mean(mesh, VectorXd(h.alpha - xz)) / mesh.area());
        CHECK(l2_surface_norm(mesh, VectorXd(h.alpha - xz - shift)) <= 1e-5);
        CHECK(l2_surface_norm(mesh, h.nx_grad_beta) <= 1e-5);
        // the remainder is spectral-differentiation error; 48 triangles at p = 6 give
        // a few 1e-3, and the level-1 p = 8 mesh of the acceptance run reaches 1e-5
        CHECK(l2_surface_norm(mesh, h.harmonic) <= 5e-3);
    }

    SUBCASE("generic field has no harmonic part")
    {
        TangentialRhs rhs = tangential_rhs(mesh, biot_savart_field(Vector3d(0.37, 0.48, -0.8), Vector3d(0.1, 0.2, 2.1)));
        normalize(mesh, rhs);
        const HodgeResult h = hodge_decompose(system, rhs.F, rhs.div_F, rhs.div_nxF);
        CHECK(l2_surface_norm(mesh, h.harmonic) <= 1e-2);
        CHECK((h.grad_alpha + h.nx_grad_beta + h.harmonic - rhs.F).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(l2_surface_norm(mesh, h.grad_alpha) > 0.1);
        CHECK(l2_surface_norm(mesh, h.nx_grad_beta) > 0.1);

        // divergences from spectral differentiation give nearly the same split
        const HodgeResult spectral = hodge_decompose(system, rhs.F);
        CHECK(l2_surface_norm(mesh, TangentField(spectral.grad_alpha - h.grad_alpha)) <= 1e-2);
    }

    SUBCASE("non-tangential input is rejected")
    {
        const TangentField bad = mesh.normals();
        CHECK_THROWS_AS(hodge_decompose(system, bad), ContractError);
    }
}

TEST_CASE("torus fields carry a harmonic component")
{
    const SurfaceMesh mesh = torus_mesh(4, 4, 4);
    LaplaceBeltramiSystem system(mesh);
    TangentialRhs rhs = tangential_rhs(mesh, biot_savart_field(Vector3d(0.37, 0.48, -0.8), Vector3d(0.1, 0.2, 2.1)));
    normalize(mesh, rhs);
    const HodgeResult h = hodge_decompose(system, rhs.F, rhs.div_F, rhs.div_nxF);
    CHECK(l2_surface_norm(mesh, h.harmonic) >= 0.01);
    CHECK((h.grad_alpha + h.nx_grad_beta + h.harmonic - rhs.F).cwiseAbs().maxCoeff() <= 1e-12);
}
