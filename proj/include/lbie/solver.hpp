#pragma once

#include "lbie/operators.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lbie {

enum class SolveMethod { LU, GMRES };

struct SolverConfig {
    SolveMethod method = SolveMethod::GMRES;
    /// Relative residual target of GMRES.
    double gmres_tol = 1e-14;
    int max_iter = 500;
    /// Report the 2-norm condition number of A from an SVD (n_pts <= 4000)
    /// or, on the LU path for larger systems, the LU 1-norm estimate.
    bool estimate_condition = false;
};

struct GmresResult {
    VectorXd x;
    /// Relative residual norms |b - A x_k| / |b|, k = 0 .. iterations.
    std::vector<double> history;
    int iterations = 0;
    bool converged = false;
};

using LinearMap = std::function<VectorXd(const VectorXd&)>;

/// Unrestarted GMRES with modified Gram-Schmidt and Givens rotations, from a
/// zero initial guess. Throws SolverError on stagnation (no 10x residual
/// reduction within 50 iterations); returns a partial result with
/// converged = false when max_iter is reached.
GmresResult gmres(const LinearMap& a, const VectorXd& b, double tol, int max_iter);
GmresResult gmres(const MatrixXd& a, const VectorXd& b, double tol, int max_iter);

struct SolveReport {
    SurfaceDensity psi;
    SurfaceDensity sigma;
    /// Relative l2 residual |S f - A sigma| / |S f|.
    double residual = 0.0;
    int iterations = 0;
    double mean_psi = 0.0;
    std::optional<double> condition;
    std::vector<double> history;
    std::vector<std::string> warnings;
};

/// Assembled Laplace-Beltrami system on one mesh; reusable across right-hand
/// sides. LU factors (when used) are computed on first solve.
class LaplaceBeltramiSystem {
public:
    LaplaceBeltramiSystem(const SurfaceMesh& mesh, const QuadConfig& qcfg = {},
                          WScaling scaling = WScaling::Mean);
    /// Reuse operators assembled elsewhere (fingerprints must match the mesh).
    LaplaceBeltramiSystem(const SurfaceMesh& mesh, std::shared_ptr<const LayerOperators> ops,
                          WScaling scaling = WScaling::Mean);

    const SurfaceMesh& mesh() const { return mesh_; }
    const LayerOperators& operators() const { return *ops_; }
    const SystemOperator& system() const { return system_; }

    /// Solve Delta_Gamma psi = f through A sigma = S f, psi = S sigma.
    SolveReport solve(const SurfaceDensity& f, const SolverConfig& cfg = {});

private:
    const SurfaceMesh& mesh_;
    std::shared_ptr<const LayerOperators> ops_;
    WScaling scaling_;
    SystemOperator system_;
    std::unique_ptr<Eigen::PartialPivLU<MatrixXd>> lu_;
    std::optional<double> condition_;
};

/// One-shot assemble and solve.
SolveReport lb_solve(const SurfaceMesh& mesh, const SurfaceDensity& f,
                     const SolverConfig& cfg = {}, const QuadConfig& qcfg = {});

}  // namespace lbie
