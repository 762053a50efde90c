#pragma once

#include "lbie/mesh.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace lbie {

using Matrix3d = Eigen::Matrix3d;
using VectorXcd = Eigen::VectorXcd;

constexpr int kMaxHarmonicDegree = 20;

/// Orthonormal spherical harmonic Y_l^m (Condon-Shortley phase) at a point of
/// the unit sphere. Throws DomainError for |m| > l, l > 20 or |x| != 1.
std::complex<double> spherical_harmonic(int l, int m, const Vector3d& x);
/// Y_l^m at every node of a mesh of the unit sphere.
VectorXcd spherical_harmonic(int l, int m, const SurfaceMesh& mesh);

/// Scalar field near the surface with gradient and Hessian.
class VolumeFunction {
public:
    struct Sample {
        double value;
        Vector3d gradient;
        Matrix3d hessian;
    };
    using Evaluator = std::function<Sample(const Vector3d&)>;

    explicit VolumeFunction(Evaluator eval) : eval_(std::move(eval)) {}
    /// g(x) = C sum_j 1 / (4 pi |x - x_j|).
    static VolumeFunction point_sources(std::vector<Vector3d> sources, double strength = 1.0);

    Sample operator()(const Vector3d& x) const { return eval_(x); }
    /// Singular points, if any (used to reject sources on the surface).
    const std::vector<Vector3d>& sources() const { return sources_; }

private:
    Evaluator eval_;
    std::vector<Vector3d> sources_;
};

/// `count` points uniformly distributed on the sphere of the given radius
/// about the origin, from std::mt19937_64 seeded with `seed`. The raw engine
/// output is mapped to doubles by hand so the points are identical on every
/// standard library.
std::vector<Vector3d> random_sphere_points(int count, double radius, std::uint64_t seed);

struct ManufacturedProblem {
    SurfaceDensity f;
    SurfaceDensity psi_exact;
};

/// f = Delta g - 2 H dg/dn - d2g/dn2 restricted to the surface, which equals
/// Delta_Gamma (g|_Gamma); psi_exact is g|_Gamma minus its mean. Throws
/// DomainError when a source lies within 1e-3 of a mesh node.
ManufacturedProblem manufactured_rhs(const SurfaceMesh& mesh, const VolumeFunction& g);

/// Vector field with Jacobian J(i, j) = dV_i / dx_j.
struct VectorField {
    std::function<Vector3d(const Vector3d&)> value;
    std::function<Matrix3d(const Vector3d&)> jacobian;
};

/// B(x) = L x (x - x0) / |x - x0|^3. Throws DomainError at x = x0.
Vector3d biot_savart(const Vector3d& L, const Vector3d& x0, const Vector3d& x);
VectorField biot_savart_field(const Vector3d& L, const Vector3d& x0);

struct TangentialRhs {
    /// F = -n x (n x V), the tangential part of V.
    TangentField F;
    /// div_Gamma F = div V - 2 H (n . V) - n . (J n)
    SurfaceDensity div_F;
    /// div_Gamma (n x F) = -n . curl V
    SurfaceDensity div_nxF;
};

TangentialRhs tangential_rhs(const SurfaceMesh& mesh, const VectorField& V);

}  // namespace lbie
