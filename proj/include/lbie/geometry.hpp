#pragma once

#include "lbie/reference_element.hpp"
#include "lbie/types.hpp"

#include <functional>
#include <span>
#include <variant>

namespace lbie {

/// Position and first/second partial derivatives of a chart at (u, v).
template <typename Scalar>
struct ChartDerivatives {
    Vec3<Scalar> x, xu, xv, xuu, xuv, xvv;
};

/// Differential geometry of the surface at one point of a chart.
template <typename Scalar>
struct GeometryJet {
    Vec3<Scalar> x, xu, xv, xuu, xuv, xvv;
    Vec3<Scalar> n;     ///< unit normal, (xu, xv, n) right-handed
    Mat2<Scalar> g;     ///< first fundamental form
    Mat2<Scalar> g_inv;
    Scalar sqrt_g;      ///< area element |xu x xv|
    Scalar H;           ///< mean curvature, +1 on the unit sphere with outward normal
};

/// Smooth map of the reference triangle T0 = {u, v >= 0, u + v <= 1} into R^3.
///
/// Analytic charts wrap a callable returning exact derivatives. Polynomial
/// charts store 3 x n_pol(order) Koornwinder coefficients.
class TriangleChart {
public:
    using AnalyticMap = std::function<ChartDerivatives<double>(double, double)>;

    static TriangleChart analytic(AnalyticMap map);
    static TriangleChart polynomial(Matrix3Xd coefficients, int order);
    /// Affine chart through three vertices (a polynomial chart of order 1).
    static TriangleChart flat(const Vector3d& a, const Vector3d& b, const Vector3d& c);
    /// Polynomial chart of the given order interpolating `images` at the
    /// nodes `uv` by least squares; returns the fit residual in `residual`.
    static TriangleChart fit(const Eigen::Ref<const Eigen::Matrix2Xd>& uv,
                             const Eigen::Ref<const Matrix3Xd>& images, int order,
                             double* residual = nullptr);

    ChartDerivatives<double> derivatives(double u, double v) const;
    Vector3d point(double u, double v) const;

    bool is_polynomial() const { return std::holds_alternative<Polynomial>(map_); }
    /// Geometric order of a polynomial chart; 0 for analytic charts.
    int order() const;
    const Matrix3Xd& coefficients() const;

private:
    struct Polynomial {
        Matrix3Xd coefficients;
        int order;
    };
    std::variant<AnalyticMap, Polynomial> map_;
};

/// Largest distance between the images of the vertices and edge midpoints.
double chart_diameter(const TriangleChart& chart);

/// Build a jet from chart derivatives. `triangle` only labels errors.
/// Throws DegenerateElementError when |xu x xv| <= 1e-14 |xu| |xv|.
template <typename Scalar>
GeometryJet<Scalar> make_jet(const ChartDerivatives<Scalar>& d, int triangle = -1);

/// Jet of `chart` at (u, v) in the closed reference triangle.
GeometryJet<double> evaluate_jet(const TriangleChart& chart, double u, double v,
                                 int triangle = -1);

/// H = -(1/2) tr(II I^{-1}) with II_ij = x_ij . n.
template <typename Scalar>
Scalar mean_curvature(const GeometryJet<Scalar>& jet)
{
    Mat2<Scalar> second;
    second << jet.xuu.dot(jet.n), jet.xuv.dot(jet.n), jet.xuv.dot(jet.n), jet.xvv.dot(jet.n);
    return Scalar(-0.5) * (second * jet.g_inv).trace();
}

/// Tangent-basis components (F^u, F^v) of a tangential vector.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> tangent_components(const GeometryJet<Scalar>& jet,
                                               const Vec3<Scalar>& F)
{
    const Eigen::Matrix<Scalar, 2, 1> cov(F.dot(jet.xu), F.dot(jet.xv));
    return jet.g_inv * cov;
}

/// Surface gradient of one element's nodal samples, by spectral
/// differentiation of the Koornwinder interpolant. Returns 3 x n_pol.
Matrix3Xd surface_gradient(const ReferenceElement& ref, std::span<const GeometryJet<double>> jets,
                           const Eigen::Ref<const VectorXd>& samples);

/// Surface divergence of one element's tangential nodal field (3 x n_pol),
/// from the interpolants of sqrt(g) F^u and sqrt(g) F^v. Throws
/// ContractError when |F . n| exceeds 1e-10 max|F| at some node.
VectorXd surface_divergence(const ReferenceElement& ref, std::span<const GeometryJet<double>> jets,
                            const Eigen::Ref<const Matrix3Xd>& field);

}  // namespace lbie
