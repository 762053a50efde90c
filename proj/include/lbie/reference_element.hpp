#pragma once

#include "lbie/koornwinder.hpp"
#include "lbie/types.hpp"

#include <memory>

namespace lbie {

/// Interpolation nodes on the reference triangle with positive interpolatory
/// quadrature weights.
enum class NodeFamily {
    /// Eigenvalue-seeded, Gauss-Newton-refined interior nodes (tabulated for
    /// orders 1 to 12).
    Optimized,
};

/// Order-p discretization of functions on the reference triangle T0.
///
/// `values` is V(i, l) = K_l(u_i, v_i); `coefficients` is its inverse U, which
/// maps nodal samples to Koornwinder coefficients. `diff_u`, `diff_v` map
/// nodal samples to nodal values of the partial derivatives of the
/// interpolant.
struct ReferenceElement {
    int order = 0;
    NodeFamily family = NodeFamily::Optimized;
    Eigen::Matrix2Xd nodes;
    VectorXd weights;
    MatrixXd values;
    MatrixXd coefficients;
    MatrixXd diff_u;
    MatrixXd diff_v;
    /// Polynomial degree integrated exactly by `weights`.
    int quadrature_degree = 0;

    int size() const { return static_cast<int>(weights.size()); }

    /// Interpolate nodal samples to an arbitrary point of T0.
    double interpolate(const Eigen::Ref<const VectorXd>& samples, double u, double v) const;
};

constexpr int kMaxOrder = 12;

/// Build (or fetch from a process-wide cache) the order-p reference element.
/// Throws ContractError for p outside [1, 12].
std::shared_ptr<const ReferenceElement> build_reference_element(
    int p, NodeFamily family = NodeFamily::Optimized);

}  // namespace lbie
