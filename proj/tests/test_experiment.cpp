#include "lbie/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace lbie;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// CSV without the wall_time_s column, which is the only nondeterministic field.
std::string without_wall_time(const std::string& csv)
{
    std::string out;
    for (const auto& l : lines(csv)) out += l.substr(0, l.rfind(',')) + "\n";
    return out;
}

}  // namespace

TEST_CASE("experiment configuration validation")
{
    ExperimentConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.resolved_levels() == std::vector<int>{48, 192});
    cfg.levels = {50};
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg.levels = {768};
    cfg.p = 8;
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg.stretch = true;
    CHECK_NOTHROW(cfg.validate());

    ExperimentConfig torus;
    torus.experiment = parse_experiment("torus-convergence");
    CHECK(torus.resolved_levels() == std::vector<int>{32, 128});
    torus.levels = {30};
    CHECK_THROWS_AS(torus.validate(), ContractError);
    CHECK_THROWS_AS(parse_experiment("cube"), ContractError);

    ExperimentConfig gm;
    gm.experiment = Experiment::GmshSolve;
    CHECK_THROWS_AS(gm.validate(), ContractError);
    ExperimentConfig sh;
    sh.ell = 2;
    sh.m = 3;
    CHECK_THROWS_AS(sh.validate(), ContractError);
}

TEST_CASE("sphere experiment output is deterministic")
{
    ExperimentConfig cfg;
    cfg.p = 3;
    cfg.levels = {48};
    const ExperimentResult a = run_experiment(cfg);
    const ExperimentResult b = run_experiment(cfg);
    REQUIRE(a.all_converged());
    const std::string csv = to_csv(a);
    CHECK(without_wall_time(csv) == without_wall_time(to_csv(b)));

    const auto ls = lines(csv);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0].rfind("# lbie ", 0) == 0);
    CHECK(ls[1].rfind("# config: {", 0) == 0);
    CHECK(ls[2] == "p,n_tri,n_pts,l2_error,mean_psi,iterations,residual,wall_time_s\r");
    CHECK(ls[3].rfind("3,48,480,", 0) == 0);
    CHECK(ls[3].find("e-") != std::string::npos);

    const nlohmann::json j = to_json(a);
    CHECK(j["version"] == kVersion);
    CHECK(j["config"]["experiment"] == "sphere-convergence");
    CHECK(j["config"]["levels"] == nlohmann::json::array({48}));
    CHECK(j["rows"][0]["n_pts"] == 480);
    CHECK(j["rows"][0]["l2_error"].get<double>() < 1e-3);
    CHECK(j["all_converged"] == true);
}

TEST_CASE("gmsh-solve and hodge experiments on a written mesh")
{
    const auto path = std::filesystem::temp_directory_path() / "lbie_experiment_torus.msh";
    write_gmsh(path.string(), torus_mesh(4, 4, 3), 3);

    ExperimentConfig cfg;
    cfg.experiment = Experiment::GmshSolve;
    cfg.mesh = path.string();
    cfg.p = 3;
    const ExperimentResult r = run_experiment(cfg);
    REQUIRE(r.all_converged());
    CHECK(r.rows.size() == 1);
    CHECK(r.rows[0].n_tri == 32);
    CHECK(r.rows[0].condition.has_value());

    cfg.experiment = Experiment::Hodge;
    const ExperimentResult h = run_experiment(cfg);
    REQUIRE(h.all_converged());
    REQUIRE(h.hodge.size() == 1);
    CHECK(h.hodge[0].norm_F == doctest::Approx(1.0));
    CHECK(h.hodge[0].norm_harmonic > 0.01);
    const nlohmann::json j = to_json(h);
    CHECK(j["rows"][0]["l2_error"].is_null());
    CHECK(j["hodge"][0].contains("div_harmonic"));
    const std::string csv = to_csv(h);
    CHECK(csv.find("norm_harmonic,div_harmonic,div_nx_harmonic,wall_time_s\r\n3,32,") != std::string::npos);
    CHECK(csv.find(",,") == std::string::npos);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(run_experiment(cfg), FormatError);
}
