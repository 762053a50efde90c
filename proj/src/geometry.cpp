#include "lbie/geometry.hpp"

#include <array>
#include <cmath>
#include <string>

namespace lbie {

TriangleChart TriangleChart::analytic(AnalyticMap map)
{
    TriangleChart c;
    c.map_ = std::move(map);
    return c;
}

TriangleChart TriangleChart::polynomial(Matrix3Xd coefficients, int order)
{
    if (coefficients.cols() != n_pol(order))
        throw ContractError("TriangleChart::polynomial: expected " + std::to_string(n_pol(order)) +
                            " coefficients for order " + std::to_string(order));
    TriangleChart c;
    c.map_ = Polynomial{std::move(coefficients), order};
    return c;
}

TriangleChart TriangleChart::flat(const Vector3d& a, const Vector3d& b, const Vector3d& c)
{
    Eigen::Matrix2Xd uv(2, 3);
    uv << 0, 1, 0, 0, 0, 1;
    Matrix3Xd images(3, 3);
    images << a, b, c;
    return fit(uv, images, 1);
}

TriangleChart TriangleChart::fit(const Eigen::Ref<const Eigen::Matrix2Xd>& uv,
                                 const Eigen::Ref<const Matrix3Xd>& images, int order,
                                 double* residual)
{
    const MatrixXd V = koornwinder_matrix(order, uv);
    const auto qr = V.colPivHouseholderQr();
    const MatrixXd coeffs = qr.solve(images.transpose());
    if (residual) *residual = (V * coeffs - images.transpose()).cwiseAbs().maxCoeff();
    return polynomial(coeffs.transpose(), order);
}

ChartDerivatives<double> TriangleChart::derivatives(double u, double v) const
{
    if (const auto* poly = std::get_if<Polynomial>(&map_)) {
        const KoornwinderJet k = koornwinder_jet(poly->order, u, v, true);
        const Matrix3Xd& c = poly->coefficients;
        return {c * k.value, c * k.du, c * k.dv, c * k.duu, c * k.duv, c * k.dvv};
    }
    return std::get<AnalyticMap>(map_)(u, v);
}

Vector3d TriangleChart::point(double u, double v) const
{
    if (const auto* poly = std::get_if<Polynomial>(&map_))
        return poly->coefficients * koornwinder(poly->order, u, v);
    return std::get<AnalyticMap>(map_)(u, v).x;
}

int TriangleChart::order() const
{
    if (const auto* poly = std::get_if<Polynomial>(&map_)) return poly->order;
    return 0;
}

const Matrix3Xd& TriangleChart::coefficients() const
{
    if (const auto* poly = std::get_if<Polynomial>(&map_)) return poly->coefficients;
    throw ContractError("TriangleChart::coefficients: chart is analytic");
}

template <typename Scalar>
GeometryJet<Scalar> make_jet(const ChartDerivatives<Scalar>& d, int triangle)
{
    GeometryJet<Scalar> jet;
    jet.x = d.x;
    jet.xu = d.xu;
    jet.xv = d.xv;
    jet.xuu = d.xuu;
    jet.xuv = d.xuv;
    jet.xvv = d.xvv;
    const Vec3<Scalar> cross = d.xu.cross(d.xv);
    jet.sqrt_g = cross.norm();
    const Scalar scale = d.xu.norm() * d.xv.norm();
    if (!(jet.sqrt_g > Scalar(1e-14) * scale))
        throw DegenerateElementError("degenerate chart on triangle " + std::to_string(triangle),
                                     triangle);
    jet.n = cross / jet.sqrt_g;
    const Scalar guu = d.xu.dot(d.xu), guv = d.xu.dot(d.xv), gvv = d.xv.dot(d.xv);
    jet.g << guu, guv, guv, gvv;
    const Scalar det = guu * gvv - guv * guv;
    jet.g_inv << gvv / det, -guv / det, -guv / det, guu / det;
    jet.H = mean_curvature(jet);
    return jet;
}

template GeometryJet<double> make_jet(const ChartDerivatives<double>&, int);
template GeometryJet<long double> make_jet(const ChartDerivatives<long double>&, int);

GeometryJet<double> evaluate_jet(const TriangleChart& chart, double u, double v, int triangle)
{
    constexpr double slack = 1e-12;
    if (u < -slack || v < -slack || u + v > 1.0 + slack)
        throw ContractError("evaluate_jet: (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") is outside the reference triangle");
    return make_jet(chart.derivatives(u, v), triangle);
}

Matrix3Xd surface_gradient(const ReferenceElement& ref, std::span<const GeometryJet<double>> jets,
                           const Eigen::Ref<const VectorXd>& samples)
{
    const int np = ref.size();
    if (samples.size() != np || static_cast<int>(jets.size()) != np)
        throw ContractError("surface_gradient: expected " + std::to_string(np) +
                            " samples and jets for order " + std::to_string(ref.order));
    const VectorXd du = ref.diff_u * samples;
    const VectorXd dv = ref.diff_v * samples;
    Matrix3Xd grad(3, np);
    for (int i = 0; i < np; ++i) {
        const auto& j = jets[i];
        const Vector2d c = j.g_inv * Vector2d(du[i], dv[i]);
        grad.col(i) = c[0] * j.xu + c[1] * j.xv;
    }
    return grad;
}

VectorXd surface_divergence(const ReferenceElement& ref, std::span<const GeometryJet<double>> jets,
                            const Eigen::Ref<const Matrix3Xd>& field)
{
    const int np = ref.size();
    if (field.cols() != np || static_cast<int>(jets.size()) != np)
        throw ContractError("surface_divergence: expected " + std::to_string(np) +
                            " samples and jets for order " + std::to_string(ref.order));
    const double scale = field.colwise().norm().maxCoeff();
    VectorXd fu(np), fv(np);
    for (int i = 0; i < np; ++i) {
        const auto& j = jets[i];
        const Vector3d F = field.col(i);
        if (std::abs(F.dot(j.n)) > 1e-10 * scale)
            throw ContractError("surface_divergence: field is not tangential at node " +
                                std::to_string(i));
        const Vector2d c = tangent_components(j, F);
        fu[i] = j.sqrt_g * c[0];
        fv[i] = j.sqrt_g * c[1];
    }
    VectorXd div = ref.diff_u * fu + ref.diff_v * fv;
    for (int i = 0; i < np; ++i) div[i] /= jets[i].sqrt_g;
    return div;
}

double chart_diameter(const TriangleChart& chart)
{
    static const double probes[6][2] = {{0, 0}, {1, 0}, {0, 1}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}};
    std::array<Vector3d, 6> pts;
    for (int q = 0; q < 6; ++q) pts[q] = chart.point(probes[q][0], probes[q][1]);
    double diam = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) diam = std::max(diam, (pts[a] - pts[b]).norm());
    return diam;
}

}  // namespace lbie
