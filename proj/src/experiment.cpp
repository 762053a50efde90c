#include "lbie/experiment.hpp"

#include "lbie/analytic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#ifndef LBIE_VERSION
#define LBIE_VERSION "0.0.0"
#endif

namespace lbie {

const char* const kVersion = "lbie " LBIE_VERSION;

namespace {

constexpr Index kStretchPoints = 10000;

const char* experiment_names[] = {"sphere-convergence", "torus-convergence", "gmsh-solve", "hodge"};

int sphere_level(int n_tri)
{
    for (int level = 0, n = 48; level < 8; ++level, n *= 4)
        if (n == n_tri) return level;
    return -1;
}

int torus_side(int n_tri)
{
    const int side = static_cast<int>(std::lround(std::sqrt(n_tri / 2.0)));
    return (side >= 1 && 2 * side * side == n_tri) ? side : -1;
}

SurfaceMesh geometry_order(SurfaceMesh mesh, int geom_order)
{
    return geom_order > 0 ? with_polynomial_geometry(mesh, geom_order) : mesh;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SolverConfig solver_config(const ExperimentConfig& cfg, bool condition)
{
    SolverConfig s;
    s.method = cfg.solver;
    s.gmres_tol = cfg.gmres_tol;
    s.estimate_condition = condition;
    return s;
}

// Point sources on a sphere 7/4 times the largest distance of the surface from
// its centroid (radius 7 for the 3-to-1 torus), normalized so ||f|| = 1.
ManufacturedProblem point_source_problem(const SurfaceMesh& mesh, std::uint64_t seed)
{
    const Vector3d centre = mesh.positions() * mesh.weights() / mesh.area();
    const double extent = (mesh.positions().colwise() - centre).colwise().norm().maxCoeff();
    auto sources = random_sphere_points(10, 1.75 * extent, seed);
    for (auto& s : sources) s += centre;
    ManufacturedProblem prob = manufactured_rhs(mesh, VolumeFunction::point_sources(sources));
    const double scale = 1.0 / l2_surface_norm(mesh, prob.f);
    prob.f *= scale;
    prob.psi_exact *= scale;
    return prob;
}

void fill_from_report(LevelResult& row, const SolveReport& rep)
{
    row.iterations = std::max(row.iterations, rep.iterations);
    row.residual = std::max(row.residual, rep.residual);
}

LevelResult solve_sphere(const ExperimentConfig& cfg, int n_tri)
{
    LevelResult row;
    row.p = cfg.p;
    row.n_tri = n_tri;
    const auto t0 = std::chrono::steady_clock::now();
    const SurfaceMesh mesh = geometry_order(sphere_mesh(sphere_level(n_tri), cfg.p), cfg.geom_order);
    row.n_pts = mesh.n_pts();
    LaplaceBeltramiSystem system(mesh, cfg.quad);
    const VectorXcd y = spherical_harmonic(cfg.ell, cfg.m, mesh);
    const double lambda = -double(cfg.ell) * (cfg.ell + 1);
    const SolverConfig scfg = solver_config(cfg, false);
    const SolveReport re = system.solve(y.real(), scfg);
    fill_from_report(row, re);
    double err2 = std::pow(l2_surface_norm(mesh, VectorXd(re.psi - y.real() / lambda)), 2);
    double mean2 = re.mean_psi * re.mean_psi;
    if (cfg.m != 0) {
        const SolveReport im = system.solve(y.imag(), scfg);
        fill_from_report(row, im);
        err2 += std::pow(l2_surface_norm(mesh, VectorXd(im.psi - y.imag() / lambda)), 2);
        mean2 += im.mean_psi * im.mean_psi;
    }
    row.l2_error = std::sqrt(err2);
    row.mean_psi = std::sqrt(mean2);
    row.converged = true;
    row.wall_time_s = seconds_since(t0);
    return row;
}

LevelResult solve_manufactured(const ExperimentConfig& cfg, const SurfaceMesh& mesh)
{
    LevelResult row;
    row.p = cfg.p;
    row.n_tri = mesh.n_tri();
    row.n_pts = mesh.n_pts();
    const auto t0 = std::chrono::steady_clock::now();
    const ManufacturedProblem prob = point_source_problem(mesh, cfg.seed);
    LaplaceBeltramiSystem system(mesh, cfg.quad);
    const SolveReport rep = system.solve(prob.f, solver_config(cfg, mesh.n_pts() <= 4000));
    fill_from_report(row, rep);
    row.l2_error = l2_surface_norm(mesh, VectorXd(rep.psi - prob.psi_exact));
    row.mean_psi = rep.mean_psi;
    row.condition = rep.condition;
    row.converged = true;
    row.wall_time_s = seconds_since(t0);
    return row;
}

std::pair<LevelResult, HodgeSummary> solve_hodge(const ExperimentConfig& cfg, const SurfaceMesh& mesh)
{
    LevelResult row;
    row.p = cfg.p;
    row.n_tri = mesh.n_tri();
    row.n_pts = mesh.n_pts();
    const auto t0 = std::chrono::steady_clock::now();
    const Vector3d x0(0.1, 0.2, 2.1);
    const Vector3d dir(0.37, 0.48, -0.80);
    TangentialRhs rhs = tangential_rhs(mesh, biot_savart_field(dir, x0));
    // ||n x B|| = ||F|| since n x B only sees the tangential part
    const double scale = 1.0 / l2_surface_norm(mesh, rhs.F);
    rhs.F *= scale;
    rhs.div_F *= scale;
    rhs.div_nxF *= scale;
    LaplaceBeltramiSystem system(mesh, cfg.quad);
    const HodgeResult h = hodge_decompose(system, rhs.F, rhs.div_F, rhs.div_nxF, solver_config(cfg, false));
    fill_from_report(row, h.alpha_report);
    fill_from_report(row, h.beta_report);
    row.mean_psi = std::hypot(h.alpha_report.mean_psi, h.beta_report.mean_psi);
    row.l2_error = std::numeric_limits<double>::quiet_NaN();
    row.converged = true;
    row.wall_time_s = seconds_since(t0);
    HodgeSummary s;
    s.n_tri = mesh.n_tri();
    s.norm_F = l2_surface_norm(mesh, rhs.F);
    s.norm_grad_alpha = l2_surface_norm(mesh, h.grad_alpha);
    s.norm_nx_grad_beta = l2_surface_norm(mesh, h.nx_grad_beta);
    s.norm_harmonic = l2_surface_norm(mesh, h.harmonic);
    s.div_harmonic = h.div_harmonic;
    s.div_nx_harmonic = h.div_nx_harmonic;
    return {row, s};
}

}  // namespace

Experiment parse_experiment(const std::string& name)
{
    for (int i = 0; i < 4; ++i)
        if (name == experiment_names[i]) return static_cast<Experiment>(i);
    throw ContractError("unknown experiment '" + name + "'");
}

std::string to_string(Experiment e) { return experiment_names[static_cast<int>(e)]; }

std::vector<int> ExperimentConfig::resolved_levels() const
{
    if (!levels.empty()) return levels;
    switch (experiment) {
    case Experiment::SphereConvergence: return {48, 192};
    case Experiment::TorusConvergence: return {32, 128};
    case Experiment::Hodge: return mesh.empty() ? std::vector<int>{128} : std::vector<int>{};
    case Experiment::GmshSolve: return {};
    }
    return {};
}

void ExperimentConfig::validate() const
{
    if (p < 1 || p > kMaxOrder) throw ContractError("--p must be in 1..12");
    if (geom_order < 0 || geom_order > 4) throw ContractError("--geom-order must be in 0..4");
    if (!(gmres_tol > 0 && gmres_tol < 1)) throw ContractError("--gmres-tol must be in (0, 1)");
    if (threads < 0) throw ContractError("--threads must be nonnegative");
    quad.validate(p);
    const bool needs_mesh = experiment == Experiment::GmshSolve;
    if (needs_mesh && mesh.empty()) throw ContractError("gmsh-solve needs --mesh");
    if (experiment == Experiment::SphereConvergence) {
        if (ell < 1 || ell > kMaxHarmonicDegree || std::abs(m) > ell)
            throw ContractError("--ell/--m must satisfy 1 <= ell <= 20, |m| <= ell");
    }
    const bool mesh_file = needs_mesh || (experiment == Experiment::Hodge && !mesh.empty());
    for (int n : resolved_levels()) {
        if (mesh_file) throw ContractError("--levels does not apply to a mesh file");
        const bool sphere = experiment == Experiment::SphereConvergence;
        if (sphere && sphere_level(n) < 0)
            throw ContractError("sphere levels must be 48 * 4^k triangles, got " + std::to_string(n));
        if (!sphere && torus_side(n) < 0)
            throw ContractError("torus levels must be 2 n^2 triangles, got " + std::to_string(n));
        if (!stretch && Index(n) * n_pol(p) > kStretchPoints)
            throw ContractError(std::to_string(n) + " triangles at p = " + std::to_string(p) +
                                " exceeds 10000 unknowns; pass --stretch to run it");
    }
}

bool ExperimentResult::all_converged() const
{
    if (rows.empty()) return false;
    for (const auto& r : rows)
        if (!r.converged) return false;
    return true;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    if (cfg.threads > 0) Eigen::setNbThreads(cfg.threads);

    ExperimentResult result;
    result.config = cfg;
    auto guarded = [&](int n_tri, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            LevelResult row;
            row.p = cfg.p;
            row.n_tri = n_tri;
            row.error = e.what();
            result.rows.push_back(row);
        }
    };

    std::optional<SurfaceMesh> file_mesh;
    if (!cfg.mesh.empty()) {
        GmshReport report;
        GmshOptions opt;
        opt.orient_outward = true;
        file_mesh.emplace(load_gmsh(cfg.mesh, cfg.p, opt, &report));
        if (report.skipped_elements > 0)
            result.warnings.push_back(std::to_string(report.skipped_elements) + " non-triangle elements skipped");
        for (const auto& w : report.warnings) result.warnings.push_back(w);
        if (!cfg.stretch && file_mesh->n_pts() > kStretchPoints)
            throw ContractError(cfg.mesh + " has more than 10000 unknowns; pass --stretch to run it");
    }

    switch (cfg.experiment) {
    case Experiment::SphereConvergence:
        for (int n : cfg.resolved_levels())
            guarded(n, [&] { result.rows.push_back(solve_sphere(cfg, n)); });
        break;
    case Experiment::TorusConvergence:
        for (int n : cfg.resolved_levels())
            guarded(n, [&] {
                const int side = torus_side(n);
                const SurfaceMesh mesh = geometry_order(torus_mesh(side, side, cfg.p), cfg.geom_order);
                result.rows.push_back(solve_manufactured(cfg, mesh));
            });
        break;
    case Experiment::GmshSolve:
        guarded(file_mesh->n_tri(), [&] { result.rows.push_back(solve_manufactured(cfg, *file_mesh)); });
        break;
    case Experiment::Hodge:
        if (file_mesh) {
            guarded(file_mesh->n_tri(), [&] {
                auto [row, s] = solve_hodge(cfg, *file_mesh);
                result.rows.push_back(row);
                result.hodge.push_back(s);
            });
        } else {
            for (int n : cfg.resolved_levels())
                guarded(n, [&] {
                    const int side = torus_side(n);
                    const SurfaceMesh mesh = geometry_order(torus_mesh(side, side, cfg.p), cfg.geom_order);
                    auto [row, s] = solve_hodge(cfg, mesh);
                    result.rows.push_back(row);
                    result.hodge.push_back(s);
                });
        }
        break;
    }
    return result;
}

nlohmann::json to_json(const ExperimentConfig& cfg)
{
    nlohmann::json q = {{"tol_adaptive", cfg.quad.tol_adaptive},
                        {"max_depth", cfg.quad.max_depth},
                        {"near_factor", cfg.quad.near_factor},
                        {"n_polar_radial", cfg.quad.radial_order(cfg.p)},
                        {"n_polar_angular", cfg.quad.angular_order(cfg.p)},
                        {"polar_panel", cfg.quad.polar_panel},
                        {"n_smooth", cfg.quad.smooth_order(cfg.p)},
                        {"adaptive_everywhere", cfg.quad.adaptive_everywhere}};
    return {{"experiment", to_string(cfg.experiment)},
            {"p", cfg.p},
            {"geom_order", cfg.geom_order},
            {"levels", cfg.resolved_levels()},
            {"ell", cfg.ell},
            {"m", cfg.m},
            {"mesh", cfg.mesh},
            {"solver", cfg.solver == SolveMethod::LU ? "lu" : "gmres"},
            {"gmres_tol", cfg.gmres_tol},
            {"quadrature", q},
            {"seed", cfg.seed},
            {"threads", cfg.threads},
            {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"}};
}

namespace {

nlohmann::json number_or_null(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

std::string sci(double v)
{
    if (!std::isfinite(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

}  // namespace

nlohmann::json to_json(const ExperimentResult& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json j = {{"p", row.p},
                            {"n_tri", row.n_tri},
                            {"n_pts", row.n_pts},
                            {"l2_error", number_or_null(row.l2_error)},
                            {"mean_psi", row.mean_psi},
                            {"iterations", row.iterations},
                            {"residual", row.residual},
                            {"wall_time_s", row.wall_time_s},
                            {"converged", row.converged}};
        j["condition"] = row.condition ? nlohmann::json(*row.condition) : nlohmann::json(nullptr);
        if (!row.error.empty()) j["error"] = row.error;
        rows.push_back(j);
    }
    nlohmann::json out = {{"version", kVersion},
                          {"config", to_json(r.config)},
                          {"rows", rows},
                          {"warnings", r.warnings},
                          {"all_converged", r.all_converged()}};
    if (!r.hodge.empty()) {
        nlohmann::json h = nlohmann::json::array();
        for (const auto& s : r.hodge)
            h.push_back({{"n_tri", s.n_tri},
                         {"norm_F", s.norm_F},
                         {"norm_grad_alpha", s.norm_grad_alpha},
                         {"norm_nx_grad_beta", s.norm_nx_grad_beta},
                         {"norm_harmonic", s.norm_harmonic},
                         {"div_harmonic", s.div_harmonic},
                         {"div_nx_harmonic", s.div_nx_harmonic}});
        out["hodge"] = h;
    }
    return out;
}

std::string to_csv(const ExperimentResult& r)
{
    std::ostringstream out;
    out << "# " << kVersion << "\r\n# config: " << to_json(r.config).dump() << "\r\n";
    if (!r.hodge.empty()) {
        // failed levels have a row but no summary
        out << "p,n_tri,n_pts,iterations,residual,norm_F,norm_grad_alpha,norm_nx_grad_beta,norm_harmonic,"
               "div_harmonic,div_nx_harmonic,wall_time_s\r\n";
        for (const auto& row : r.rows) {
            out << row.p << ',' << row.n_tri << ',' << row.n_pts << ',';
            const auto it = std::find_if(r.hodge.begin(), r.hodge.end(),
                                         [&](const HodgeSummary& s) { return s.n_tri == row.n_tri; });
            if (!row.converged || it == r.hodge.end()) {
                out << ",,,,,,,,\r\n";
                continue;
            }
            const auto& h = *it;
            out << row.iterations << ',' << sci(row.residual) << ',' << sci(h.norm_F) << ','
                << sci(h.norm_grad_alpha) << ',' << sci(h.norm_nx_grad_beta) << ',' << sci(h.norm_harmonic) << ','
                << sci(h.div_harmonic) << ',' << sci(h.div_nx_harmonic) << ',' << sci(row.wall_time_s) << "\r\n";
        }
        return out.str();
    }
    out << "p,n_tri,n_pts,l2_error,mean_psi,iterations,residual,wall_time_s\r\n";
    for (const auto& row : r.rows) {
        if (!row.converged) {
            out << row.p << ',' << row.n_tri << ',' << row.n_pts << ",,,,,\r\n";
            continue;
        }
        out << row.p << ',' << row.n_tri << ',' << row.n_pts << ',' << sci(row.l2_error) << ','
            << sci(row.mean_psi) << ',' << row.iterations << ',' << sci(row.residual) << ','
            << sci(row.wall_time_s) << "\r\n";
    }
    return out.str();
}

}  // namespace lbie
