// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Usage: lbie_acceptance [path to lbie_tests for the property-suite criterion]

#include "lbie/analytic.hpp"
#include "lbie/experiment.hpp"
#include "lbie/hodge.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <random>
#include <string>

using namespace lbie;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void detail(const char* fmt, auto... args)
{
    std::printf("    ");
    std::printf(fmt, args...);
    std::printf("\n");
    std::fflush(stdout);
}

void verdict(int id, bool ok, const std::string& what)
{
    std::printf("CRITERION %d %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Assembled {
    SurfaceMesh mesh;
    std::shared_ptr<const LayerOperators> ops;
    double seconds = 0.0;
};

std::unique_ptr<Assembled> assemble_on(SurfaceMesh mesh)
{
    const auto t0 = Clock::now();
    auto a = std::make_unique<Assembled>(Assembled{std::move(mesh), nullptr, 0.0});
    a->ops = std::make_shared<const LayerOperators>(assemble_layer_operators(a->mesh));
    a->seconds = seconds_since(t0);
    detail("assembled %s, %d tri, p = %d, %ld nodes in %.1f s", a->mesh.name().c_str(), a->mesh.n_tri(),
           a->mesh.order(), long(a->mesh.n_pts()), a->seconds);
    return a;
}

struct HarmonicSolve {
    double error = 0.0;
    double mean = 0.0;
    int iterations = 0;
    double seconds = 0.0;
};

// Delta psi = Y_l^m with psi = -Y / (l (l + 1)); real and imaginary parts solved separately.
HarmonicSolve solve_harmonic(const Assembled& a, int l, int m)
{
    const auto t0 = Clock::now();
    LaplaceBeltramiSystem system(a.mesh, a.ops);
    const VectorXcd y = spherical_harmonic(l, m, a.mesh);
    const double lambda = -double(l) * (l + 1);
    HarmonicSolve out;
    double err2 = 0.0;
    for (const VectorXd part : {VectorXd(y.real()), VectorXd(y.imag())}) {
        const SolveReport rep = system.solve(part);
        err2 += std::pow(l2_surface_norm(a.mesh, VectorXd(rep.psi - part / lambda)), 2);
        out.mean = std::max(out.mean, std::abs(rep.mean_psi));
        out.iterations = std::max(out.iterations, rep.iterations);
    }
    out.error = std::sqrt(err2);
    out.seconds = seconds_since(t0) + a.seconds;
    return out;
}

struct TorusSolve {
    double error = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

TorusSolve solve_torus(const Assembled& a)
{
    ManufacturedProblem prob =
        manufactured_rhs(a.mesh, VolumeFunction::point_sources(random_sphere_points(10, 7.0, 42)));
    const double scale = 1.0 / l2_surface_norm(a.mesh, prob.f);
    prob.f *= scale;
    prob.psi_exact *= scale;
    LaplaceBeltramiSystem system(a.mesh, a.ops);
    const SolveReport rep = system.solve(prob.f);
    return {l2_surface_norm(a.mesh, VectorXd(rep.psi - prob.psi_exact)), rep.iterations, rep.residual};
}

struct HodgeRun {
    HodgeResult h;
    TangentialRhs rhs;
};

HodgeRun hodge_biot_savart(const Assembled& a)
{
    TangentialRhs rhs = tangential_rhs(a.mesh, biot_savart_field(Vector3d(0.37, 0.48, -0.80), Vector3d(0.1, 0.2, 2.1)));
    const double s = 1.0 / l2_surface_norm(a.mesh, rhs.F);
    rhs.F *= s;
    rhs.div_F *= s;
    rhs.div_nxF *= s;
    LaplaceBeltramiSystem system(a.mesh, a.ops);
    HodgeResult h = hodge_decompose(system, rhs.F, rhs.div_F, rhs.div_nxF);
    return {std::move(h), std::move(rhs)};
}

// Second normal-derivative sum by direct differentiation: n_x^T Hess_x G (n_x - n_y).
double naive_diff_sum(const Vector3d& x, const Vector3d& nx, const Vector3d& y, const Vector3d& ny, double& scale)
{
    using L = long double;
    const Eigen::Matrix<L, 3, 1> R = (x - y).cast<L>();
    const L r = R.norm();
    const L c = 1.0L / (4.0L * std::numbers::pi_v<L>);
    const Eigen::Matrix<L, 3, 3> H =
        c * (3.0L * R * R.transpose() / std::pow(r, 5) - Eigen::Matrix<L, 3, 3>::Identity() / std::pow(r, 3));
    scale = double(H.norm()) * (nx - ny).norm();
    return double(nx.cast<L>().dot(H * (nx - ny).cast<L>()));
}

}  // namespace

int main(int argc, char** argv)
{
    const auto start = Clock::now();
    std::printf("%s acceptance run\n", kVersion);

    // 1 and the S1 part of 5: sphere, p = 4
    double s1_error = 0.0;
    {
        HarmonicSolve r[2];
        for (int level : {0, 1}) {
            const auto a = assemble_on(sphere_mesh(level, 4));
            if (level == 0) {
                const VectorXd one = VectorXd::Ones(a->mesh.n_pts());
                s1_error = (a->ops->single * one - one).cwiseAbs().maxCoeff();
            }
            r[level] = solve_harmonic(*a, 1, 1);
            detail("Y_1^1, %d tri: L2 error %.3e, |mean psi| %.3e, %d iterations, %.1f s", a->mesh.n_tri(),
                   r[level].error, r[level].mean, r[level].iterations, r[level].seconds);
        }
        const double ratio = r[0].error / r[1].error;
        detail("convergence ratio %.1f", ratio);
        const bool ok = r[0].error <= 5e-5 && r[1].error <= 1e-6 && ratio >= 16 &&
                        std::max(r[0].mean, r[1].mean) <= 1e-10;
        verdict(1, ok, "sphere Y_1^1, p = 4: error <= 5e-5 (48), <= 1e-6 (192), ratio >= 16, |mean| <= 1e-10");
    }

    // 2, 3 and the sphere part of 6: sphere, p = 8
    double sphere_harmonic_part = 0.0, sphere_reconstruction = 0.0;
    {
        HarmonicSolve r[2];
        {
            const auto a = assemble_on(sphere_mesh(0, 8));
            r[0] = solve_harmonic(*a, 7, 6);
        }
        const auto a = assemble_on(sphere_mesh(1, 8));
        r[1] = solve_harmonic(*a, 7, 6);
        {
            const HodgeRun hr = hodge_biot_savart(*a);
            sphere_harmonic_part = l2_surface_norm(a->mesh, hr.h.harmonic) / l2_surface_norm(a->mesh, hr.rhs.F);
            sphere_reconstruction =
                (hr.h.grad_alpha + hr.h.nx_grad_beta + hr.h.harmonic - hr.rhs.F).cwiseAbs().maxCoeff();
        }
        for (int i : {0, 1})
            detail("Y_7^6, %d tri: L2 error %.3e, %d iterations, %.1f s", 48 << (2 * i), r[i].error, r[i].iterations,
                   r[i].seconds);
        const double ratio = r[0].error / r[1].error;
        detail("error reduction %.1f", ratio);
        verdict(2, ratio >= 100, "sphere Y_7^6, p = 8: error reduction 48 -> 192 >= 100");

        const SystemOperator sys(a->mesh, *a->ops);
        double worst_s = 0.0, worst_a = 0.0;
        for (int l : {0, 1, 2, 5}) {
            double es = 0.0, ea = 0.0;
            for (int m = -l; m <= l; ++m) {
                const VectorXcd y = spherical_harmonic(l, m, a->mesh);
                for (const VectorXd part : {VectorXd(y.real()), VectorXd(y.imag())}) {
                    if (part.norm() == 0.0) continue;
                    const double factor = -double(l * (l + 1)) / ((2 * l + 1) * (2 * l + 1));
                    es = std::max(es, l2_surface_norm(a->mesh, VectorXd(a->ops->single * part - part / (2 * l + 1))));
                    ea = std::max(ea, l2_surface_norm(a->mesh, VectorXd(sys.apply_without_W(part) - factor * part)));
                }
            }
            detail("l = %d: max_m ||S Y - Y/(2l+1)|| %.3e, ||(A - SWS) Y + l(l+1)/(2l+1)^2 Y|| %.3e", l, es, ea);
            worst_s = std::max(worst_s, es);
            worst_a = std::max(worst_a, ea);
        }
        verdict(3, worst_s <= 1e-6 && worst_a <= 1e-5,
                "sphere level 1, p = 8: single layer diagonal form <= 1e-6, Calderon composition <= 1e-5");
    }

    // 4 and the torus part of 6: torus, p = 8, 10 sources at radius 7, seed 42
    {
        TorusSolve t[2];
        double cond = 0.0;
        {
            const auto a = assemble_on(torus_mesh(4, 4, 8));
            t[0] = solve_torus(*a);
            cond = condition_number(compose_system(a->mesh, *a->ops).entries);
        }
        const auto a = assemble_on(torus_mesh(8, 8, 8));
        t[1] = solve_torus(*a);
        for (int i : {0, 1})
            detail("torus %d tri: L2 error %.3e, %d iterations, residual %.2e", 32 << (2 * i), t[i].error,
                   t[i].iterations, t[i].residual);
        const double ratio = t[0].error / t[1].error;
        detail("error ratio %.1f, 2-norm condition number at 32 tri %.2f", ratio, cond);
        const bool ok = t[0].error <= 1e-3 && ratio >= 100 && std::max(t[0].iterations, t[1].iterations) <= 60 &&
                        std::max(t[0].residual, t[1].residual) <= 1e-14 && cond >= 5 && cond <= 100;
        verdict(4, ok, "torus p = 8: error <= 1e-3 (32), ratio >= 100, GMRES <= 60 iterations, cond in [5, 100]");

        // 5
        std::mt19937_64 rng(20240601);
        std::uniform_real_distribution<double> box(-1.0, 1.0);
        std::normal_distribution<double> gauss;
        auto unit = [&] { return Vector3d(gauss(rng), gauss(rng), gauss(rng)).normalized(); };
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Vector3d x(box(rng), box(rng), box(rng));
            Vector3d y(box(rng), box(rng), box(rng));
            if ((x - y).norm() < 0.2) y += 0.2 * (y - x).normalized();
            const Vector3d nx = unit(), ny = unit();
            double scale = 0.0;
            const double naive = naive_diff_sum(x, nx, y, ny, scale);
            worst = std::max(worst, std::abs(eval_kernel(KernelKind::DiffSum, x, nx, y, ny) - naive) / scale);
        }
        detail("max |S1 - 1| on the sphere (48 tri, p = 4) %.3e", s1_error);
        detail("difference kernel vs naive sum, 10^4 configurations: max normwise relative error %.3e", worst);
        verdict(5, s1_error <= 1e-6 && worst <= 1e-12, "S1 = 1 to 1e-6; closed-form difference kernel to 1e-12");

        // 6
        const auto t0 = Clock::now();
        const HodgeRun hr = hodge_biot_savart(*a);
        const double recon = (hr.h.grad_alpha + hr.h.nx_grad_beta + hr.h.harmonic - hr.rhs.F).cwiseAbs().maxCoeff();
        const double nH = l2_surface_norm(a->mesh, hr.h.harmonic);
        detail("torus 128 tri: ||div H|| %.3e, ||div(n x H)|| %.3e, ||H|| %.3e, ||grad a|| %.3e, ||n x grad b|| %.3e (%.1f s)",
               hr.h.div_harmonic, hr.h.div_nx_harmonic, nH, l2_surface_norm(a->mesh, hr.h.grad_alpha),
               l2_surface_norm(a->mesh, hr.h.nx_grad_beta), seconds_since(t0));
        const double ip1 = std::abs(field_inner(a->mesh, hr.h.grad_alpha, hr.h.nx_grad_beta));
        const double ip2 = std::abs(field_inner(a->mesh, hr.h.grad_alpha, hr.h.harmonic));
        const double ip3 = std::abs(field_inner(a->mesh, hr.h.nx_grad_beta, hr.h.harmonic));
        detail("pairwise component inner products %.2e %.2e %.2e", ip1, ip2, ip3);
        detail("sphere 192 tri harmonic part %.3e relative; reconstruction %.2e (sphere), %.2e (torus)", sphere_harmonic_part,
               sphere_reconstruction, recon);
        const bool ok6 = hr.h.div_harmonic <= 1e-3 && hr.h.div_nx_harmonic <= 1e-3 && sphere_harmonic_part <= 1e-4 &&
                         std::max(recon, sphere_reconstruction) <= 1e-12;
        verdict(6, ok6, "Hodge: torus divergences <= 1e-3, sphere harmonic part <= 1e-4, reconstruction <= 1e-12");
    }

    // 7: property suites of the unit-test binary
    {
        if (argc < 2) {
            verdict(7, false, "property suites: no lbie_tests path given");
        } else {
            const auto t0 = Clock::now();
            const std::string cmd = std::string(argv[1]) + " --test-suite=property --no-intro --minimal";
            const int rc = std::system(cmd.c_str());
            const double dt = seconds_since(t0);
            detail("property suites exit %d in %.1f s", rc, dt);
            verdict(7, rc == 0 && dt <= 120, "property suites green in <= 2 min");
        }
    }

    std::printf("%d criteria failed; total %.1f s\n", failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}
