#pragma once

#include "lbie/geometry.hpp"
#include "lbie/reference_element.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lbie {

/// Per-node scalar samples on a mesh, indexed tri * n_pol + local node.
using SurfaceDensity = VectorXd;
/// Per-node 3-vectors (tangential fields), one column per node.
using TangentField = Matrix3Xd;

/// Curvilinear triangulation of a closed surface with an order-p density
/// discretization. Immutable after construction.
class SurfaceMesh {
public:
    SurfaceMesh(std::vector<TriangleChart> charts, std::shared_ptr<const ReferenceElement> ref,
                std::string name = {});

    int n_tri() const { return static_cast<int>(charts_.size()); }
    Index n_pts() const { return static_cast<Index>(charts_.size()) * ref_->size(); }
    int order() const { return ref_->order; }
    int n_pol() const { return ref_->size(); }
    const std::string& name() const { return name_; }

    const ReferenceElement& reference() const { return *ref_; }
    std::shared_ptr<const ReferenceElement> reference_ptr() const { return ref_; }
    const TriangleChart& chart(int t) const { return charts_[t]; }
    const std::vector<TriangleChart>& charts() const { return charts_; }

    Index node(int tri, int local) const { return Index(tri) * ref_->size() + local; }
    const GeometryJet<double>& jet(Index node) const { return jets_[node]; }
    std::span<const GeometryJet<double>> element_jets(int tri) const
    {
        return {jets_.data() + node(tri, 0), static_cast<size_t>(ref_->size())};
    }

    const Matrix3Xd& positions() const { return positions_; }
    const Matrix3Xd& normals() const { return normals_; }
    const VectorXd& curvature() const { return curvature_; }
    /// Smooth quadrature weights w_j = w_ref * sqrt(g) (area units).
    const VectorXd& weights() const { return weights_; }
    double area() const { return weights_.sum(); }

    /// Image of the reference centroid and a diameter estimate of triangle t.
    const Vector3d& centroid(int t) const { return centroids_[t]; }
    double diameter(int t) const { return diameters_[t]; }

    /// Hash of node positions; identifies the discretization an operator was built on.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    std::vector<TriangleChart> charts_;
    std::shared_ptr<const ReferenceElement> ref_;
    std::string name_;
    std::vector<GeometryJet<double>> jets_;
    Matrix3Xd positions_, normals_;
    VectorXd curvature_, weights_;
    std::vector<Vector3d> centroids_;
    std::vector<double> diameters_;
    std::uint64_t fingerprint_ = 0;
};

/// Unit-cube triangulation (8 triangles per face, quadrisected `level` times)
/// projected onto the sphere of the given radius: 48 * 4^level triangles.
SurfaceMesh sphere_mesh(int level, int p, double radius = 1.0);

/// Torus ((R + r cos u) cos v, (R + r cos u) sin v, r sin u) split into
/// n_u x n_v parameter rectangles, two triangles each.
SurfaceMesh torus_mesh(int n_u, int n_v, int p, double major = 3.0, double minor = 1.0);

/// Replace every chart by the order-q polynomial interpolating it at the
/// Gmsh nodes of that order (the geometry a high-order mesher would produce).
SurfaceMesh with_polynomial_geometry(const SurfaceMesh& mesh, int geom_order);

/// Same surface with triangles reordered: triangle t of the result is
/// triangle perm[t] of the input.
SurfaceMesh permuted(const SurfaceMesh& mesh, std::span<const int> perm);

/// Diagnostics gathered while reading a Gmsh file.
struct GmshReport {
    int triangles = 0;
    int skipped_elements = 0;
    std::vector<std::string> warnings;
};

struct GmshOptions {
    /// Reverse all triangles when the enclosed signed volume is negative.
    bool orient_outward = false;
};

/// Reference (u, v) of the nodes of a Gmsh triangle of geometric order 1..4,
/// in Gmsh ordering.
Eigen::Matrix2Xd gmsh_triangle_nodes(int geom_order);

/// Read an ASCII MSH 2.2 file with triangle elements of types 2, 9, 21, 23.
SurfaceMesh load_gmsh(const std::string& path, int p, const GmshOptions& options = {},
                      GmshReport* report = nullptr);

/// Write each chart sampled at the order-q Gmsh nodes as ASCII MSH 2.2.
void write_gmsh(const std::string& path, const SurfaceMesh& mesh, int geom_order);

/// sum_j w_j v_j
template <typename Derived>
typename Derived::Scalar weighted_mean(const SurfaceMesh& mesh, const Eigen::MatrixBase<Derived>& values)
{
    return (mesh.weights().array().template cast<typename Derived::Scalar>() * values.array()).sum();
}

/// sqrt(sum_j w_j |v_j|^2) for scalar densities (real or complex).
template <typename Derived>
double l2_surface_norm(const SurfaceMesh& mesh, const Eigen::MatrixBase<Derived>& values)
{
    if (values.rows() == 3 && values.cols() == mesh.n_pts())
        return std::sqrt((values.colwise().squaredNorm().transpose().array() *
                          mesh.weights().array())
                             .sum());
    if (values.size() != mesh.n_pts())
        throw ContractError("l2_surface_norm: size does not match mesh nodes");
    return std::sqrt((mesh.weights().array() * values.array().abs2()).sum());
}

/// Weighted inner product sum_j w_j a_j . b_j of two tangent fields.
double field_inner(const SurfaceMesh& mesh, const TangentField& a, const TangentField& b);

/// Mesh-wide spectral surface gradient, divergence and Laplace-Beltrami.
TangentField surface_gradient(const SurfaceMesh& mesh, const SurfaceDensity& psi);
SurfaceDensity surface_divergence(const SurfaceMesh& mesh, const TangentField& field);
SurfaceDensity surface_laplacian(const SurfaceMesh& mesh, const SurfaceDensity& psi);

/// Pointwise n x F.
TangentField cross_normal(const SurfaceMesh& mesh, const TangentField& field);

}  // namespace lbie
