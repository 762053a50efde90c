#include "lbie/geometry.hpp"
#include "lbie/mesh.hpp"

#include <doctest.h>

#include <cmath>

using namespace lbie;

TEST_SUITE_BEGIN("property");

TEST_CASE("mean curvature is +1 on the unit sphere with outward normals")
{
    const SurfaceMesh mesh = sphere_mesh(0, 4);
    for (Index k = 0; k < mesh.n_pts(); ++k) {
        CHECK(mesh.curvature()[k] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mesh.normals().col(k).dot(mesh.positions().col(k)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mesh.positions().col(k).norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("torus curvature matches the closed form")
{
    // H = (R + 2 r cos u) / (2 r (R + r cos u)) for major R = 3, minor r = 1
    const SurfaceMesh mesh = torus_mesh(4, 4, 3);
    for (Index k = 0; k < mesh.n_pts(); ++k) {
        const Vector3d x = mesh.positions().col(k);
        const double rho = std::hypot(x[0], x[1]);
        const double cu = rho - 3.0;
        CHECK(mesh.curvature()[k] == doctest::Approx((3.0 + 2 * cu) / (2 * (3.0 + cu))).epsilon(1e-10));
        // outward: normal points away from the tube centre line
        const Vector3d centre(3.0 * x[0] / rho, 3.0 * x[1] / rho, 0.0);
        CHECK(mesh.normals().col(k).dot(x - centre) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("analytic chart derivatives agree with finite differences")
{
    const SurfaceMesh mesh = torus_mesh(4, 4, 2);
    const double u = 0.3, v = 0.25, h = 1e-5;
    for (int t : {0, 7, 31}) {
        const TriangleChart& c = mesh.chart(t);
        const auto d = c.derivatives(u, v);
        const auto up = c.derivatives(u + h, v), um = c.derivatives(u - h, v);
        const auto vp = c.derivatives(u, v + h), vm = c.derivatives(u, v - h);
        CHECK((d.xu - (up.x - um.x) / (2 * h)).norm() < 1e-8);
        CHECK((d.xv - (vp.x - vm.x) / (2 * h)).norm() < 1e-8);
        CHECK((d.xuu - (up.xu - um.xu) / (2 * h)).norm() < 1e-7);
        CHECK((d.xuv - (vp.xu - vm.xu) / (2 * h)).norm() < 1e-7);
        CHECK((d.xvv - (vp.xv - vm.xv) / (2 * h)).norm() < 1e-7);
    }
    const SurfaceMesh sphere = sphere_mesh(0, 2);
    for (int t : {0, 20, 47}) {
        const TriangleChart& c = sphere.chart(t);
        const auto d = c.derivatives(u, v);
        const auto up = c.derivatives(u + h, v), um = c.derivatives(u - h, v);
        const auto vp = c.derivatives(u, v + h), vm = c.derivatives(u, v - h);
        CHECK((d.xu - (up.x - um.x) / (2 * h)).norm() < 1e-8);
        CHECK((d.xuu - (up.xu - um.xu) / (2 * h)).norm() < 1e-7);
        CHECK((d.xuv - (vp.xu - vm.xu) / (2 * h)).norm() < 1e-7);
        CHECK((d.xvv - (vp.xv - vm.xv) / (2 * h)).norm() < 1e-7);
    }
}

TEST_CASE("degenerate and out-of-domain evaluations throw")
{
    const TriangleChart collapsed =
        TriangleChart::flat(Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(2, 0, 0));
    CHECK_THROWS_AS(evaluate_jet(collapsed, 0.2, 0.2, 5), DegenerateElementError);
    const TriangleChart flat = TriangleChart::flat(Vector3d(0, 0, 0), Vector3d(1, 0, 0), Vector3d(0, 1, 0));
    CHECK_THROWS_AS(evaluate_jet(flat, 0.8, 0.8), ContractError);
    const auto jet = evaluate_jet(flat, 0.2, 0.2);
    CHECK(jet.n.isApprox(Vector3d(0, 0, 1)));
    CHECK(jet.H == doctest::Approx(0.0));
}

TEST_CASE("polynomial fit reproduces a quadratic chart exactly")
{
    auto map = [](double u, double v) {
        return Vector3d(u + 0.1 * v * v, v - 0.2 * u * v, 0.3 * u * u + 0.05 * v);
    };
    const Eigen::Matrix2Xd uv = gmsh_triangle_nodes(2);
    Matrix3Xd images(3, uv.cols());
    for (Index k = 0; k < uv.cols(); ++k) images.col(k) = map(uv(0, k), uv(1, k));
    double residual = 1.0;
    const TriangleChart c = TriangleChart::fit(uv, images, 2, &residual);
    CHECK(residual < 1e-13);
    CHECK(c.order() == 2);
    CHECK((c.point(0.31, 0.22) - map(0.31, 0.22)).norm() < 1e-13);
}

TEST_CASE("element surface gradient and divergence on the sphere")
{
    // psi = z: grad_G z = e_z - z n, div_G(grad_G z) = -2 z
    double prev_grad = 1.0, prev_lap = 1.0;
    for (int p : {4, 6, 8}) {
        CAPTURE(p);
        const SurfaceMesh mesh = sphere_mesh(1, p);
        const VectorXd z = mesh.positions().row(2).transpose();
        const TangentField grad = surface_gradient(mesh, z);
        double err = 0.0;
        for (Index k = 0; k < mesh.n_pts(); ++k) {
            const Vector3d n = mesh.normals().col(k);
            err = std::max(err, (grad.col(k) - (Vector3d::UnitZ() - z[k] * n)).norm());
        }
        const double lap_err = (surface_laplacian(mesh, z) + 2 * z).cwiseAbs().maxCoeff();
        CHECK(err < 0.2 * prev_grad);
        CHECK(lap_err < 0.5 * prev_lap);
        prev_grad = err;
        prev_lap = lap_err;
    }
    CHECK(prev_grad < 1e-4);
    CHECK(prev_lap < 1e-2);

    const SurfaceMesh mesh = sphere_mesh(0, 4);
    TangentField bad = surface_gradient(mesh, VectorXd(mesh.positions().row(2).transpose()));
    bad.col(3) += mesh.normals().col(3);
    CHECK_THROWS_AS(surface_divergence(mesh, bad), ContractError);
}

TEST_SUITE_END();
