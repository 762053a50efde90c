#include "lbie/gauss.hpp"

#include <cmath>
#include <numbers>

namespace lbie {

GaussRule gauss_legendre(int n)
{
    if (n < 1) throw ContractError("gauss_legendre: need at least one node");
    GaussRule rule{VectorXd(n), VectorXd(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

TriangleRule collapsed_gauss_rule(int n)
{
    const GaussRule g = gauss_legendre(n);
    TriangleRule rule{Eigen::Matrix2Xd(2, n * n), VectorXd(n * n)};
    for (int j = 0; j < n; ++j) {
        const double v = g.nodes[j];
        for (int i = 0; i < n; ++i) {
            const int k = j * n + i;
            rule.points(0, k) = (1.0 - v) * g.nodes[i];
            rule.points(1, k) = v;
            rule.weights[k] = g.weights[i] * g.weights[j] * (1.0 - v);
        }
    }
    return rule;
}

}  // namespace lbie
