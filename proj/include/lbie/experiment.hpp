#pragma once

#include "lbie/hodge.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lbie {

extern const char* const kVersion;

enum class Experiment { SphereConvergence, TorusConvergence, GmshSolve, Hodge };
enum class OutputFormat { Csv, Json };

Experiment parse_experiment(const std::string& name);
std::string to_string(Experiment e);

struct ExperimentConfig {
    Experiment experiment = Experiment::SphereConvergence;
    /// Density order.
    int p = 4;
    /// 0 keeps analytic charts; 1..4 replaces them by polynomial charts.
    int geom_order = 0;
    /// Triangle counts; empty selects the experiment's default list.
    std::vector<int> levels;
    int ell = 1;
    int m = 1;
    std::string mesh;
    SolveMethod solver = SolveMethod::GMRES;
    double gmres_tol = 1e-14;
    QuadConfig quad;
    std::string out;
    OutputFormat format = OutputFormat::Csv;
    int threads = 0;
    /// Seed of the point-source placement in manufactured problems.
    std::uint64_t seed = 42;
    /// Permit systems above 10000 unknowns.
    bool stretch = false;

    /// Throws ContractError describing the first invalid field.
    void validate() const;
    /// Levels after defaults are applied.
    std::vector<int> resolved_levels() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);

/// One solve: one refinement level, or the single mesh of gmsh-solve.
struct LevelResult {
    int p = 0;
    int n_tri = 0;
    long n_pts = 0;
    double l2_error = 0.0;
    double mean_psi = 0.0;
    int iterations = 0;
    double residual = 0.0;
    double wall_time_s = 0.0;
    bool converged = false;
    std::optional<double> condition;
    std::string error;
};

struct HodgeSummary {
    int n_tri = 0;
    double norm_F = 0.0, norm_grad_alpha = 0.0, norm_nx_grad_beta = 0.0, norm_harmonic = 0.0;
    double div_harmonic = 0.0, div_nx_harmonic = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<LevelResult> rows;
    std::vector<HodgeSummary> hodge;
    std::vector<std::string> warnings;
    bool all_converged() const;
};

/// Run every level. Solver failures are recorded per row rather than thrown;
/// invalid configurations and unreadable meshes throw.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// RFC 4180 table with header
/// p,n_tri,n_pts,l2_error,mean_psi,iterations,residual,wall_time_s
/// preceded by '#' comment lines carrying the version and configuration.
std::string to_csv(const ExperimentResult& r);
nlohmann::json to_json(const ExperimentResult& r);

}  // namespace lbie
