#include "lbie/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

// Exit codes: 0 all solves converged, 1 some solve failed, 2 invalid input, 3 output error.
int fail(const std::string& stage, const std::string& message, int code)
{
    nlohmann::json err = {{"error", {{"stage", stage}, {"message", message}}}, {"version", lbie::kVersion}};
    std::cerr << err.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Laplace-Beltrami boundary integral solver experiments"};
    app.set_version_flag("--version", lbie::kVersion);

    lbie::ExperimentConfig cfg;
    std::string experiment = "sphere-convergence";
    std::string solver = "gmres";
    std::string format;
    app.add_option("--experiment", experiment, "sphere-convergence | torus-convergence | gmsh-solve | hodge")
        ->check(CLI::IsMember({"sphere-convergence", "torus-convergence", "gmsh-solve", "hodge"}));
    app.add_option("--p", cfg.p, "Density order (1..12)")->capture_default_str();
    app.add_option("--geom-order", cfg.geom_order, "Polynomial chart order, 0 keeps analytic charts")
        ->capture_default_str();
    app.add_option("--levels", cfg.levels, "Triangle counts, e.g. 48,192")->delimiter(',');
    app.add_option("--ell", cfg.ell, "Spherical harmonic degree")->capture_default_str();
    app.add_option("--m", cfg.m, "Spherical harmonic order")->capture_default_str();
    app.add_option("--mesh", cfg.mesh, "Gmsh MSH 2.2 file")->check(CLI::ExistingFile);
    app.add_option("--solver", solver, "lu | gmres")->check(CLI::IsMember({"lu", "gmres"}))->capture_default_str();
    app.add_option("--gmres-tol", cfg.gmres_tol, "Relative GMRES tolerance")->capture_default_str();
    app.add_option("--quad-tol", cfg.quad.tol_adaptive, "Adaptive quadrature tolerance")->capture_default_str();
    app.add_option("--out", cfg.out, "Output file, stdout if omitted");
    app.add_option("--format", format, "csv | json (default from --out extension, else csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", cfg.threads, "Worker threads, 0 uses the runtime default")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed of the manufactured point sources")->capture_default_str();
    app.add_flag("--stretch", cfg.stretch, "Allow runs above 10000 unknowns");
    app.add_flag("--adaptive-everywhere", cfg.quad.adaptive_everywhere, "Adaptive rule for far pairs too");
    app.add_flag("--self-check", cfg.quad.self_check, "Refine the self rule and report its change");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return fail("arguments", e.what(), 2);
    }

    if (format.empty())
        format = cfg.out.size() > 5 && cfg.out.substr(cfg.out.size() - 5) == ".json" ? "json" : "csv";
    cfg.format = format == "json" ? lbie::OutputFormat::Json : lbie::OutputFormat::Csv;
    cfg.solver = solver == "lu" ? lbie::SolveMethod::LU : lbie::SolveMethod::GMRES;

    lbie::ExperimentResult result;
    try {
        cfg.experiment = lbie::parse_experiment(experiment);
        cfg.validate();
    } catch (const lbie::Error& e) {
        return fail("config", e.what(), 2);
    }
    try {
        result = lbie::run_experiment(cfg);
    } catch (const lbie::Error& e) {
        return fail("setup", e.what(), 2);
    }

    const std::string text =
        cfg.format == lbie::OutputFormat::Json ? lbie::to_json(result).dump(2) + "\n" : lbie::to_csv(result);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        file << text;
        if (!file) return fail("output", "cannot write " + cfg.out, 3);
    }
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& row : result.rows)
        if (!row.converged) std::cerr << "error: n_tri " << row.n_tri << ": " << row.error << '\n';
    return result.all_converged() ? 0 : 1;
}
