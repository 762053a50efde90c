#pragma once

#include "lbie/types.hpp"

namespace lbie {

/// Gauss-Legendre nodes and weights mapped to [0, 1].
struct GaussRule {
    VectorXd nodes;
    VectorXd weights;
};

GaussRule gauss_legendre(int n);

/// Quadrature rule on the reference triangle {u, v >= 0, u + v <= 1}.
/// Weights sum to the reference area 1/2.
struct TriangleRule {
    Eigen::Matrix2Xd points;
    VectorXd weights;

    Index size() const { return weights.size(); }
};

/// Collapsed (Duffy) tensor Gauss rule with n x n points; exact for total
/// degree 2n - 2.
TriangleRule collapsed_gauss_rule(int n);

}  // namespace lbie
