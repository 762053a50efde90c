#include "lbie/analytic.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <random>
#include <string>

namespace lbie {

using std::numbers::pi;

std::complex<double> spherical_harmonic(int l, int m, const Vector3d& x)
{
    if (l < 0 || l > kMaxHarmonicDegree || std::abs(m) > l)
        throw DomainError("spherical_harmonic: need |m| <= l <= 20, got l = " + std::to_string(l) +
                          ", m = " + std::to_string(m));
    if (std::abs(x.norm() - 1.0) > 1e-10) throw DomainError("spherical_harmonic: point not on the unit sphere");
    if (m < 0) {
        const std::complex<double> y = std::conj(spherical_harmonic(l, -m, x));
        return (m % 2 == 0) ? y : -y;
    }
    const double ct = std::clamp(x.z(), -1.0, 1.0);
    const double st = std::hypot(x.x(), x.y());
    const double phi = std::atan2(x.y(), x.x());

    // normalized associated Legendre functions, upward in l at fixed m
    double pmm = 1.0 / std::sqrt(4 * pi);
    for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1) / (2.0 * k)) * st;
    double plm = pmm;
    if (l > m) {
        double prev = pmm;
        double cur = std::sqrt(2.0 * m + 3) * ct * pmm;
        for (int k = m + 2; k <= l; ++k) {
            const double a = std::sqrt((4.0 * k * k - 1) / (double(k) * k - double(m) * m));
            const double b = std::sqrt((double(k - 1) * (k - 1) - double(m) * m) / (4.0 * (k - 1) * (k - 1) - 1));
            const double next = a * (ct * cur - b * prev);
            prev = cur;
            cur = next;
        }
        plm = cur;
    }
    return plm * std::polar(1.0, m * phi);
}

VectorXcd spherical_harmonic(int l, int m, const SurfaceMesh& mesh)
{
    VectorXcd y(mesh.n_pts());
    for (Index k = 0; k < mesh.n_pts(); ++k) y[k] = spherical_harmonic(l, m, mesh.positions().col(k));
    return y;
}

VolumeFunction VolumeFunction::point_sources(std::vector<Vector3d> sources, double strength)
{
    const double c = strength / (4 * pi);
    VolumeFunction f([sources, c](const Vector3d& x) {
        Sample s{0.0, Vector3d::Zero(), Matrix3d::Zero()};
        for (const Vector3d& xj : sources) {
            const Vector3d R = x - xj;
            const double r2 = R.squaredNorm();
            const double r = std::sqrt(r2);
            const double r3 = r2 * r;
            s.value += c / r;
            s.gradient -= c * R / r3;
            s.hessian += c * (3.0 * R * R.transpose() / (r3 * r2) - Matrix3d::Identity() / r3);
        }
        return s;
    });
    f.sources_ = std::move(sources);
    return f;
}

std::vector<Vector3d> random_sphere_points(int count, double radius, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
    std::vector<Vector3d> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double z = 2 * uniform() - 1;
        const double phi = 2 * pi * uniform();
        const double s = std::sqrt(std::max(0.0, 1 - z * z));
        pts.emplace_back(radius * s * std::cos(phi), radius * s * std::sin(phi), radius * z);
    }
    return pts;
}

ManufacturedProblem manufactured_rhs(const SurfaceMesh& mesh, const VolumeFunction& g)
{
    const Index n = mesh.n_pts();
    for (const Vector3d& xj : g.sources())
        if ((mesh.positions().colwise() - xj).colwise().norm().minCoeff() < 1e-3)
            throw DomainError("manufactured_rhs: source within 1e-3 of the surface");
    ManufacturedProblem out{SurfaceDensity(n), SurfaceDensity(n)};
    for (Index k = 0; k < n; ++k) {
        const Vector3d nk = mesh.normals().col(k);
        const auto s = g(mesh.positions().col(k));
        out.f[k] = s.hessian.trace() - 2 * mesh.curvature()[k] * s.gradient.dot(nk) -
                   nk.dot(s.hessian * nk);
        out.psi_exact[k] = s.value;
    }
    out.psi_exact.array() -= weighted_mean(mesh, out.psi_exact) / mesh.area();
    return out;
}

Vector3d biot_savart(const Vector3d& L, const Vector3d& x0, const Vector3d& x)
{
    const Vector3d R = x - x0;
    const double r = R.norm();
    if (r == 0.0) throw DomainError("biot_savart: field point at the source");
    return L.cross(R) / (r * r * r);
}

VectorField biot_savart_field(const Vector3d& L, const Vector3d& x0)
{
    VectorField v;
    v.value = [L, x0](const Vector3d& x) { return biot_savart(L, x0, x); };
    v.jacobian = [L, x0](const Vector3d& x) {
        const Vector3d R = x - x0;
        const double r2 = R.squaredNorm();
        const double r3 = r2 * std::sqrt(r2);
        Matrix3d cross_L;
        cross_L << 0, -L.z(), L.y(), L.z(), 0, -L.x(), -L.y(), L.x(), 0;
        return Matrix3d(cross_L / r3 - 3.0 * L.cross(R) * R.transpose() / (r3 * r2));
    };
    return v;
}

TangentialRhs tangential_rhs(const SurfaceMesh& mesh, const VectorField& V)
{
    const Index n = mesh.n_pts();
    TangentialRhs out{TangentField(3, n), SurfaceDensity(n), SurfaceDensity(n)};
    for (Index k = 0; k < n; ++k) {
        const Vector3d x = mesh.positions().col(k), nk = mesh.normals().col(k);
        const Vector3d v = V.value(x);
        const Matrix3d J = V.jacobian(x);
        const Vector3d curl(J(2, 1) - J(1, 2), J(0, 2) - J(2, 0), J(1, 0) - J(0, 1));
        out.F.col(k) = v - v.dot(nk) * nk;
        out.div_F[k] = J.trace() - 2 * mesh.curvature()[k] * v.dot(nk) - nk.dot(J * nk);
        out.div_nxF[k] = -nk.dot(curl);
    }
    return out;
}

}  // namespace lbie
