#include "lbie/analytic.hpp"
#include "lbie/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace lbie;

namespace {

struct SolverFixture {
    SurfaceMesh mesh;
    std::shared_ptr<const LayerOperators> ops;
};

const SolverFixture& sphere48()
{
    static const SolverFixture f = [] {
        SurfaceMesh mesh = sphere_mesh(0, 4);
        auto ops = std::make_shared<const LayerOperators>(assemble_layer_operators(mesh));
        return SolverFixture{std::move(mesh), std::move(ops)};
    }();
    return f;
}

}  // namespace

TEST_CASE("gmres on small explicit systems")
{
    const VectorXd b = VectorXd::LinSpaced(5, 1.0, 2.0);
    const GmresResult id = gmres(MatrixXd(MatrixXd::Identity(5, 5)), b, 1e-14, 10);
    CHECK(id.converged);
    CHECK(id.iterations == 1);
    CHECK(id.history.back() <= 1e-15);
    CHECK((id.x - b).norm() <= 1e-15);

    const MatrixXd d = Eigen::Vector2d(1, 2).asDiagonal();
    const GmresResult two = gmres(d, Eigen::Vector2d(1, 1), 1e-14, 10);
    CHECK(two.converged);
    CHECK(two.iterations <= 2);
    CHECK(two.x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(two.x[1] == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(gmres(d, VectorXd::Ones(3), 1e-14, 10), ContractError);
}

TEST_CASE("gmres history is monotone and max_iter yields a partial result")
{
    const int n = 60;
    MatrixXd a = MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 1.0 + i;
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 0.5;
    const VectorXd b = VectorXd::Ones(n);
    const GmresResult part = gmres(a, b, 1e-14, 5);
    CHECK_FALSE(part.converged);
    CHECK(part.iterations == 5);
    CHECK(part.history.size() == 6);
    for (size_t k = 1; k < part.history.size(); ++k) CHECK(part.history[k] <= part.history[k - 1]);
    CHECK((b - a * part.x).norm() / b.norm() == doctest::Approx(part.history.back()).epsilon(1e-6));

    const GmresResult full = gmres(a, b, 1e-12, 200);
    CHECK(full.converged);
    CHECK((b - a * full.x).norm() / b.norm() <= 1e-12);
}

TEST_CASE("surface norms and means")
{
    const SurfaceMesh mesh = sphere_mesh(1, 8);
    const VectorXd one = VectorXd::Ones(mesh.n_pts());
    CHECK(std::pow(l2_surface_norm(mesh, one), 2) == doctest::Approx(4 * M_PI).epsilon(1e-10));
    CHECK(l2_surface_norm(mesh, spherical_harmonic(1, 1, mesh)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(l2_surface_norm(mesh, VectorXd(VectorXd::Zero(mesh.n_pts()))) == 0.0);
    CHECK(std::abs(weighted_mean(mesh, spherical_harmonic(1, 1, mesh).real())) <= 1e-12);
}

TEST_CASE("sphere eigenfunction solve, LU and GMRES")
{
    const auto& [mesh, ops] = sphere48();
    LaplaceBeltramiSystem system(mesh, ops);
    const VectorXd y = spherical_harmonic(1, 1, mesh).real();

    SolverConfig gm;
    gm.estimate_condition = true;
    const SolveReport g = system.solve(y, gm);
    CHECK(l2_surface_norm(mesh, VectorXd(g.psi + y / 2)) <= 5e-5);
    CHECK(std::abs(g.mean_psi) <= 1e-10);
    CHECK(std::abs(g.mean_psi) <= 1e-8 * l2_surface_norm(mesh, g.psi));
    CHECK(g.residual <= 1e-14);
    CHECK(g.iterations > 0);
    CHECK(g.warnings.empty());
    REQUIRE(g.condition);

    SolverConfig lu;
    lu.method = SolveMethod::LU;
    const SolveReport l = system.solve(y, lu);
    CHECK(l.iterations == 0);
    CHECK((l.sigma - g.sigma).norm() <= 10 * gm.gmres_tol * *g.condition * g.sigma.norm());

    // applying the system to sigma reproduces S f
    const VectorXd Sf = ops->single * y;
    CHECK((system.system().apply(g.sigma) - Sf).norm() <= 1e-13 * Sf.norm());
}

TEST_CASE("zero and non-mean-zero right-hand sides")
{
    const auto& [mesh, ops] = sphere48();
    LaplaceBeltramiSystem system(mesh, ops);
    const SolveReport zero = system.solve(VectorXd::Zero(mesh.n_pts()));
    CHECK(zero.psi.cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(zero.iterations == 0);

    const VectorXd shifted = spherical_harmonic(2, 0, mesh).real().array() + 0.1;
    const SolveReport w = system.solve(shifted);
    CHECK(w.warnings.size() == 1);

    CHECK_THROWS_AS(system.solve(VectorXd::Ones(3)), ContractError);
    VectorXd bad = VectorXd::Zero(mesh.n_pts());
    bad[4] = NAN;
    CHECK_THROWS_AS(system.solve(bad), ContractError);
}
