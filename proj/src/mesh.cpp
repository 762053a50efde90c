#include "lbie/mesh.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <numbers>

namespace lbie {

namespace {

std::uint64_t fnv1a(const double* data, size_t n, std::uint64_t h = 1469598103934665603ULL)
{
    const auto* bytes = reinterpret_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n * sizeof(double); ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

SurfaceMesh::SurfaceMesh(std::vector<TriangleChart> charts,
                         std::shared_ptr<const ReferenceElement> ref, std::string name)
    : charts_(std::move(charts)), ref_(std::move(ref)), name_(std::move(name))
{
    if (!ref_) throw ContractError("SurfaceMesh: missing reference element");
    const int np = ref_->size();
    const Index n = n_pts();
    jets_.reserve(n);
    positions_.resize(3, n);
    normals_.resize(3, n);
    curvature_.resize(n);
    weights_.resize(n);
    centroids_.resize(charts_.size());
    diameters_.resize(charts_.size());

    for (int t = 0; t < n_tri(); ++t) {
        for (int i = 0; i < np; ++i) {
            const Index k = node(t, i);
            jets_.push_back(evaluate_jet(charts_[t], ref_->nodes(0, i), ref_->nodes(1, i), t));
            const auto& j = jets_.back();
            positions_.col(k) = j.x;
            normals_.col(k) = j.n;
            curvature_[k] = j.H;
            weights_[k] = ref_->weights[i] * j.sqrt_g;
        }
        centroids_[t] = charts_[t].point(1.0 / 3.0, 1.0 / 3.0);
        diameters_[t] = chart_diameter(charts_[t]);
    }
    fingerprint_ = fnv1a(positions_.data(), static_cast<size_t>(positions_.size()));
}

namespace {

// x = R q / |q| for q = a + u (b - a) + v (c - a).
TriangleChart projected_chart(const Vector3d& a, const Vector3d& b, const Vector3d& c, double radius)
{
    const Vector3d e1 = b - a, e2 = c - a;
    return TriangleChart::analytic([=](double u, double v) {
        const Vector3d q = a + u * e1 + v * e2;
        const double rho = q.norm();
        const double r3 = rho * rho * rho;
        const Vector3d x = q / rho;
        auto d1 = [&](const Vector3d& h) { return Vector3d(h / rho - q * (q.dot(h)) / r3); };
        auto d2 = [&](const Vector3d& h, const Vector3d& k) {
            const double qh = q.dot(h), qk = q.dot(k);
            return Vector3d((-h * qk - k * qh - q * h.dot(k)) / r3 + 3.0 * q * qh * qk / (r3 * rho * rho));
        };
        return ChartDerivatives<double>{radius * x,          radius * d1(e1),      radius * d1(e2),
                                        radius * d2(e1, e1), radius * d2(e1, e2), radius * d2(e2, e2)};
    });
}

}  // namespace

SurfaceMesh sphere_mesh(int level, int p, double radius)
{
    if (level < 0) throw ContractError("sphere_mesh: level must be >= 0");
    using Tri = std::array<Vector3d, 3>;
    std::vector<Tri> tris;
    for (int axis = 0; axis < 3; ++axis) {
        for (int sign : {-1, 1}) {
            const Vector3d c = sign * Vector3d::Unit(axis);
            const Vector3d ea = Vector3d::Unit((axis + 1) % 3);
            const Vector3d eb = Vector3d::Unit((axis + 2) % 3);
            for (int qa : {-1, 1}) {
                for (int qb : {-1, 1}) {
                    const Vector3d pa = c + qa * ea, pb = c + qb * eb, corner = c + qa * ea + qb * eb;
                    tris.push_back({c, pa, corner});
                    tris.push_back({c, corner, pb});
                }
            }
        }
    }
    for (int l = 0; l < level; ++l) {
        std::vector<Tri> next;
        next.reserve(4 * tris.size());
        for (const Tri& t : tris) {
            const Vector3d m01 = 0.5 * (t[0] + t[1]), m12 = 0.5 * (t[1] + t[2]),
                           m20 = 0.5 * (t[2] + t[0]);
            next.push_back({t[0], m01, m20});
            next.push_back({m01, t[1], m12});
            next.push_back({m20, m12, t[2]});
            next.push_back({m12, m20, m01});
        }
        tris.swap(next);
    }
    std::vector<TriangleChart> charts;
    charts.reserve(tris.size());
    for (Tri& t : tris) {
        const Vector3d centre = (t[0] + t[1] + t[2]) / 3.0;
        if ((t[1] - t[0]).cross(t[2] - t[0]).dot(centre) < 0) std::swap(t[1], t[2]);
        charts.push_back(projected_chart(t[0], t[1], t[2], radius));
    }
    return SurfaceMesh(std::move(charts), build_reference_element(p),
                       "sphere(level=" + std::to_string(level) + ")");
}

namespace {

// Torus chart through the parameter-space triangle (p0, p1, p2) in (u, v) = (minor, major).
TriangleChart torus_chart(const Vector2d& p0, const Vector2d& p1, const Vector2d& p2, double R, double r)
{
    const Vector2d a = p1 - p0, b = p2 - p0;
    return TriangleChart::analytic([=](double s, double t) {
        const Vector2d q = p0 + s * a + t * b;
        const double cu = std::cos(q[0]), su = std::sin(q[0]);
        const double cv = std::cos(q[1]), sv = std::sin(q[1]);
        const double rho = R + r * cu;
        const Vector3d x(rho * cv, rho * sv, r * su);
        const Vector3d fu(-r * su * cv, -r * su * sv, r * cu);
        const Vector3d fv(-rho * sv, rho * cv, 0.0);
        const Vector3d fuu(-r * cu * cv, -r * cu * sv, -r * su);
        const Vector3d fuv(r * su * sv, -r * su * cv, 0.0);
        const Vector3d fvv(-rho * cv, -rho * sv, 0.0);
        auto first = [&](const Vector2d& h) { return Vector3d(h[0] * fu + h[1] * fv); };
        auto second = [&](const Vector2d& h, const Vector2d& k) {
            return Vector3d(h[0] * k[0] * fuu + (h[0] * k[1] + h[1] * k[0]) * fuv + h[1] * k[1] * fvv);
        };
        return ChartDerivatives<double>{x, first(a), first(b), second(a, a), second(a, b), second(b, b)};
    });
}

}  // namespace

SurfaceMesh torus_mesh(int n_u, int n_v, int p, double major, double minor)
{
    if (n_u < 1 || n_v < 1) throw ContractError("torus_mesh: tiling must be at least 1 x 1");
    const double du = 2.0 * std::numbers::pi / n_u, dv = 2.0 * std::numbers::pi / n_v;
    std::vector<TriangleChart> charts;
    charts.reserve(2 * n_u * n_v);
    for (int j = 0; j < n_v; ++j) {
        for (int i = 0; i < n_u; ++i) {
            const Vector2d c00(i * du, j * dv), c10((i + 1) * du, j * dv),
                c01(i * du, (j + 1) * dv), c11((i + 1) * du, (j + 1) * dv);
            // Clockwise in the (u, v) plane gives the outward normal.
            charts.push_back(torus_chart(c00, c11, c10, major, minor));
            charts.push_back(torus_chart(c00, c01, c11, major, minor));
        }
    }
    return SurfaceMesh(std::move(charts), build_reference_element(p),
                       "torus(" + std::to_string(n_u) + "x" + std::to_string(n_v) + ")");
}

SurfaceMesh with_polynomial_geometry(const SurfaceMesh& mesh, int geom_order)
{
    const Eigen::Matrix2Xd uv = gmsh_triangle_nodes(geom_order);
    std::vector<TriangleChart> charts;
    charts.reserve(mesh.n_tri());
    for (const TriangleChart& chart : mesh.charts()) {
        Matrix3Xd images(3, uv.cols());
        for (Index k = 0; k < uv.cols(); ++k) images.col(k) = chart.point(uv(0, k), uv(1, k));
        charts.push_back(TriangleChart::fit(uv, images, geom_order));
    }
    return SurfaceMesh(std::move(charts), mesh.reference_ptr(),
                       mesh.name() + "[order " + std::to_string(geom_order) + "]");
}

SurfaceMesh permuted(const SurfaceMesh& mesh, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != mesh.n_tri())
        throw ContractError("permuted: permutation size does not match triangle count");
    std::vector<TriangleChart> charts;
    charts.reserve(perm.size());
    for (int t : perm) charts.push_back(mesh.chart(t));
    return SurfaceMesh(std::move(charts), mesh.reference_ptr(), mesh.name());
}

double field_inner(const SurfaceMesh& mesh, const TangentField& a, const TangentField& b)
{
    return (a.cwiseProduct(b).colwise().sum().transpose().array() * mesh.weights().array()).sum();
}

TangentField surface_gradient(const SurfaceMesh& mesh, const SurfaceDensity& psi)
{
    const int np = mesh.n_pol();
    TangentField out(3, mesh.n_pts());
    for (int t = 0; t < mesh.n_tri(); ++t)
        out.middleCols(mesh.node(t, 0), np) =
            surface_gradient(mesh.reference(), mesh.element_jets(t), psi.segment(mesh.node(t, 0), np));
    return out;
}

SurfaceDensity surface_divergence(const SurfaceMesh& mesh, const TangentField& field)
{
    const int np = mesh.n_pol();
    SurfaceDensity out(mesh.n_pts());
    for (int t = 0; t < mesh.n_tri(); ++t)
        out.segment(mesh.node(t, 0), np) = surface_divergence(
            mesh.reference(), mesh.element_jets(t), field.middleCols(mesh.node(t, 0), np));
    return out;
}

SurfaceDensity surface_laplacian(const SurfaceMesh& mesh, const SurfaceDensity& psi)
{
    return surface_divergence(mesh, surface_gradient(mesh, psi));
}

TangentField cross_normal(const SurfaceMesh& mesh, const TangentField& field)
{
    TangentField out(3, field.cols());
    for (Index k = 0; k < field.cols(); ++k)
        out.col(k) = mesh.normals().col(k).cross(field.col(k));
    return out;
}

}  // namespace lbie
