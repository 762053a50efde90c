#pragma once

#include "lbie/geometry.hpp"
#include "lbie/kernels.hpp"
#include "lbie/reference_element.hpp"

#include <cstdint>
#include <unordered_map>

namespace lbie {

/// Layer-potential quadrature settings. Orders left at 0 are derived from the
/// density order p.
struct QuadConfig {
    /// Absolute tolerance on parent vs children moments in adaptive subdivision.
    double tol_adaptive = 1e-10;
    int max_depth = 30;
    /// Triangle counts as far when |target - centroid| >= near_factor * diameter.
    double near_factor = 2.5;
    /// Gauss points in the radial direction of the self rule (default 2p).
    int n_polar_radial = 0;
    /// Gauss points per angular panel of the self rule (default 2p).
    int n_polar_angular = 0;
    /// Length of an angular panel in the sinh-stretched variable.
    double polar_panel = 1.0;
    /// Collapsed Gauss order of the smooth rule used for far pairs and
    /// adaptive leaves (default p + 8, which keeps far and adaptive values within
    /// 1e-10 at the near_factor threshold for p <= 12).
    int n_smooth = 0;
    /// Use adaptive quadrature for every non-self pair, ignoring near_factor.
    bool adaptive_everywhere = false;
    /// Recompute every self integral at doubled orders and throw
    /// QuadratureError when the two differ by more than 10 tol_adaptive.
    bool self_check = false;

    int radial_order(int p) const { return n_polar_radial > 0 ? n_polar_radial : 2 * p; }
    int angular_order(int p) const { return n_polar_angular > 0 ? n_polar_angular : 2 * p; }
    int smooth_order(int p) const { return n_smooth > 0 ? n_smooth : p + 8; }

    /// Throws ContractError on nonpositive tolerances, near_factor <= 1 or
    /// orders below p + 1.
    void validate(int p) const;
};

/// Evaluation point with its unit normal.
struct Target {
    Vector3d x;
    Vector3d n;
};

/// Integrals int_T0 k(x, y(u, v)) K_l(u, v) sqrt(g) du dv of the four kernels
/// (rows, in KernelKind order) against the Koornwinder basis (columns).
using Moments = Eigen::Matrix<double, kNumKernels, Eigen::Dynamic>;

enum class Regime { Self, Near, Far };

/// Quadrature over one source triangle, reusing geometry and basis samples of
/// the smooth rule and of shallow subdivision levels across targets. Not
/// thread-safe; use one instance per thread.
class TriangleQuadrature {
public:
    /// Smooth rule samples: points, normals, weights w_q sqrt(g), basis(q, l).
    struct Rule {
        Matrix3Xd y, n;
        VectorXd w;
        MatrixXd basis;
    };

    TriangleQuadrature(const TriangleChart& chart, const ReferenceElement& ref,
                       const QuadConfig& cfg, int triangle = -1);

    const Rule& smooth_rule() const { return root_; }
    /// Near or Far for an off-triangle point (Self is decided by the caller).
    Regime classify(const Vector3d& x) const;

    Moments far(const Target& t) const;
    Moments near(const Target& t);
    /// Target on the triangle at reference point uv (normally a node).
    Moments self(const Vector2d& uv) const;

private:
    using Vertices = std::array<Vector2d, 3>;
    Rule build_rule(const Vertices& tri) const;
    Moments apply(const Rule& rule, const Target& t) const;
    const Rule& node_rule(std::uint64_t key, int depth, const Vertices& tri, Rule& scratch);
    Moments refine(const Target& t, std::uint64_t key, int depth, const Vertices& tri,
                   const Moments& parent);
    Moments polar(const Vector2d& uv, int n_radial, int n_angular) const;

    const TriangleChart& chart_;
    const ReferenceElement& ref_;
    QuadConfig cfg_;
    int triangle_;
    int p_;
    Vector3d centroid_;
    double diameter_ = 0.0;
    Eigen::Matrix2Xd smooth_points_;
    VectorXd smooth_weights_;
    Rule root_;
    std::unordered_map<std::uint64_t, Rule> cache_;
};

/// Smooth rule over the whole triangle.
Moments integrate_far(const Target& t, const TriangleChart& chart, const ReferenceElement& ref,
                      const QuadConfig& cfg = {});
/// Adaptive quadrisection of T0 until children and parent agree to tol_adaptive.
/// Throws QuadratureError when max_depth is exceeded.
Moments integrate_near(const Target& t, const TriangleChart& chart, const ReferenceElement& ref,
                       const QuadConfig& cfg = {});
/// Weakly singular integral for a target at reference point uv of the chart.
Moments integrate_self(const Vector2d& uv, const TriangleChart& chart, const ReferenceElement& ref,
                       const QuadConfig& cfg = {});

}  // namespace lbie
