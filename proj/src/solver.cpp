#include "lbie/solver.hpp"

#include <cmath>
#include <cstdio>

namespace lbie {

GmresResult gmres(const LinearMap& a, const VectorXd& b, double tol, int max_iter)
{
    const Index n = b.size();
    GmresResult res;
    res.x = VectorXd::Zero(n);
    const double beta = b.norm();
    res.history.push_back(beta > 0 ? 1.0 : 0.0);
    if (beta == 0.0) {
        res.converged = true;
        return res;
    }
    const int m = static_cast<int>(std::min<Index>(max_iter, n));
    MatrixXd V(n, m + 1);
    MatrixXd Hs = MatrixXd::Zero(m + 1, m);
    VectorXd cs(m), sn(m), g = VectorXd::Zero(m + 1);
    V.col(0) = b / beta;
    g[0] = beta;

    int k = 0;
    for (; k < m; ++k) {
        VectorXd w = a(V.col(k));
        for (int j = 0; j <= k; ++j) {
            Hs(j, k) = V.col(j).dot(w);
            w -= Hs(j, k) * V.col(j);
        }
        // one reorthogonalization pass keeps the basis orthogonal to rounding
        for (int j = 0; j <= k; ++j) {
            const double c = V.col(j).dot(w);
            Hs(j, k) += c;
            w -= c * V.col(j);
        }
        Hs(k + 1, k) = w.norm();
        const bool breakdown = Hs(k + 1, k) <= 1e-300;
        if (!breakdown) V.col(k + 1) = w / Hs(k + 1, k);

        for (int j = 0; j < k; ++j) {
            const double t = cs[j] * Hs(j, k) + sn[j] * Hs(j + 1, k);
            Hs(j + 1, k) = -sn[j] * Hs(j, k) + cs[j] * Hs(j + 1, k);
            Hs(j, k) = t;
        }
        const double r = std::hypot(Hs(k, k), Hs(k + 1, k));
        cs[k] = Hs(k, k) / r;
        sn[k] = Hs(k + 1, k) / r;
        Hs(k, k) = r;
        Hs(k + 1, k) = 0.0;
        g[k + 1] = -sn[k] * g[k];
        g[k] = cs[k] * g[k];

        const double rel = std::abs(g[k + 1]) / beta;
        res.history.push_back(std::min(rel, res.history.back()));
        if (rel <= tol || breakdown) {
            ++k;
            res.converged = true;
            break;
        }
        if (k + 1 >= 50 && res.history[k + 1] > 0.1 * res.history[k + 1 - 50]) {
            ++k;
            break;
        }
    }
    const VectorXd y = Hs.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    res.x = V.leftCols(k) * y;
    res.iterations = k;
    if (!res.converged && k < m)
        throw SolverError("GMRES stagnated: residual " + std::to_string(res.history.back()) +
                          " after " + std::to_string(k) + " iterations");
    return res;
}

GmresResult gmres(const MatrixXd& a, const VectorXd& b, double tol, int max_iter)
{
    if (a.rows() != a.cols() || a.rows() != b.size()) throw ContractError("gmres: shape mismatch");
    return gmres([&a](const VectorXd& x) -> VectorXd { return a * x; }, b, tol, max_iter);
}

LaplaceBeltramiSystem::LaplaceBeltramiSystem(const SurfaceMesh& mesh, const QuadConfig& qcfg,
                                             WScaling scaling)
    : LaplaceBeltramiSystem(
          mesh, std::make_shared<const LayerOperators>(assemble_layer_operators(mesh, qcfg)), scaling)
{
}

LaplaceBeltramiSystem::LaplaceBeltramiSystem(const SurfaceMesh& mesh,
                                             std::shared_ptr<const LayerOperators> ops,
                                             WScaling scaling)
    : mesh_(mesh), ops_(std::move(ops)), scaling_(scaling),
      system_(mesh, *ops_, SystemOperator::Form::Left, scaling)
{
}

SolveReport LaplaceBeltramiSystem::solve(const SurfaceDensity& f, const SolverConfig& cfg)
{
    if (f.size() != mesh_.n_pts()) throw ContractError("lb_solve: f does not match the mesh");
    if (!f.allFinite()) throw ContractError("lb_solve: f has non-finite entries");
    SolveReport rep;
    const double fnorm = l2_surface_norm(mesh_, f);
    const double fmean = weighted_mean(mesh_, f);
    if (std::abs(fmean) > 1e-6 * fnorm)
        rep.warnings.push_back("right-hand side is not mean-zero: int f = " + std::to_string(fmean));

    const MatrixXd& S = ops_->single.entries;
    const VectorXd rhs = S * f;

    if (cfg.method == SolveMethod::LU) {
        if (!lu_) {
            const OperatorMatrix A = compose_system(mesh_, *ops_, scaling_);
            if (cfg.estimate_condition && mesh_.n_pts() <= 4000) condition_ = condition_number(A.entries);
            lu_ = std::make_unique<Eigen::PartialPivLU<MatrixXd>>(A.entries);
            const auto& U = lu_->matrixLU();
            const double pivot = U.diagonal().cwiseAbs().minCoeff();
            if (!(pivot > 1e-14 * U.diagonal().cwiseAbs().maxCoeff()))
                throw SolverError("LU: system matrix is numerically singular");
            if (cfg.estimate_condition && !condition_) condition_ = 1.0 / lu_->rcond();
        }
        rep.sigma = lu_->solve(rhs);
    } else {
        const GmresResult g = gmres([this](const VectorXd& x) { return system_.apply(x); }, rhs,
                                    cfg.gmres_tol, cfg.max_iter);
        rep.sigma = g.x;
        rep.iterations = g.iterations;
        rep.history = g.history;
        if (!g.converged)
            throw SolverError("GMRES reached max_iter = " + std::to_string(cfg.max_iter) +
                              " at residual " + std::to_string(g.history.back()));
        if (cfg.estimate_condition && !condition_ && mesh_.n_pts() <= 4000)
            condition_ = condition_number(compose_system(mesh_, *ops_, scaling_).entries);
    }
    const double rnorm = rhs.norm();
    rep.residual = rnorm > 0 ? (rhs - system_.apply(rep.sigma)).norm() / rnorm : 0.0;
    rep.psi = S * rep.sigma;
    rep.mean_psi = weighted_mean(mesh_, rep.psi);
    rep.condition = condition_;
    return rep;
}

SolveReport lb_solve(const SurfaceMesh& mesh, const SurfaceDensity& f, const SolverConfig& cfg,
                     const QuadConfig& qcfg)
{
    LaplaceBeltramiSystem system(mesh, qcfg);
    return system.solve(f, cfg);
}

}  // namespace lbie
