#pragma once

#include "lbie/mesh.hpp"
#include "lbie/quadrature.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace lbie {

/// Dense Nystrom matrix: rows are target nodes, columns source nodes.
struct OperatorMatrix {
    std::string label;
    MatrixXd entries;
    std::uint64_t fingerprint = 0;

    Index rows() const { return entries.rows(); }
    VectorXd operator*(const VectorXd& x) const { return entries * x; }
};

/// The four layer potentials on one mesh. `diff_sum` is S'' + D'.
struct LayerOperators {
    OperatorMatrix single, double_layer, single_prime, diff_sum;

    const OperatorMatrix& operator[](KernelKind kind) const;
    std::uint64_t fingerprint() const { return single.fingerprint; }
};

/// Assemble one layer potential.
OperatorMatrix assemble(KernelKind kind, const SurfaceMesh& mesh, const QuadConfig& cfg = {});

/// Assemble all four layer potentials in a single pass over source triangles.
LayerOperators assemble_layer_operators(const SurfaceMesh& mesh, const QuadConfig& cfg = {});

/// W sigma = int sigma da: every row is the smooth weight vector.
OperatorMatrix assemble_W(const SurfaceMesh& mesh);

/// Scale of the W term inside the composed systems. Any positive multiple of
/// W yields the same mean-zero solution; it only moves the one eigenvalue the
/// term contributes.
enum class WScaling {
    /// (1 / |Gamma|) int sigma da; keeps that eigenvalue O(1) on surfaces of
    /// any size.
    Mean,
    /// int sigma da, exactly assemble_W.
    Integral,
};

/// A = -I/4 - 2 S H S' - S (S''+D') + D^2 + S W S, formed densely.
OperatorMatrix compose_system(const SurfaceMesh& mesh, const LayerOperators& ops,
                              WScaling scaling = WScaling::Mean);
OperatorMatrix compose_system(const SurfaceMesh& mesh, const QuadConfig& cfg = {},
                              WScaling scaling = WScaling::Mean);

/// A_R = -I/4 + S'^2 - (S''+D') S - 2 H S' S + W S^2, formed densely.
OperatorMatrix right_precondition_system(const SurfaceMesh& mesh, const LayerOperators& ops,
                                         WScaling scaling = WScaling::Mean);
OperatorMatrix right_precondition_system(const SurfaceMesh& mesh, const QuadConfig& cfg = {},
                                         WScaling scaling = WScaling::Mean);

/// Matrix-free application of the left- or right-preconditioned system
/// through six products with the stored layer potentials; W is applied as a
/// rank-one update. Holds references: `ops` and `mesh` must outlive it.
class SystemOperator {
public:
    enum class Form { Left, Right };

    SystemOperator(const SurfaceMesh& mesh, const LayerOperators& ops, Form form = Form::Left,
                   WScaling scaling = WScaling::Mean);

    Index size() const { return n_; }
    VectorXd apply(const VectorXd& x) const;
    /// Only the Laplace-Beltrami part, i.e. the system without its W term.
    VectorXd apply_without_W(const VectorXd& x) const;

private:
    const LayerOperators& ops_;
    Form form_;
    Index n_;
    VectorXd H_, w_, s1_;
};

/// 2-norm condition number from a singular value decomposition.
double condition_number(const MatrixXd& a);
/// Smallest singular value.
double smallest_singular_value(const MatrixXd& a);

/// Raw dump: 8-byte magic "LBIEMAT1", uint64 n, 16-byte zero-padded label,
/// then n*n row-major float64. A debugging aid, not a stable format.
void dump_matrix(const std::string& path, const OperatorMatrix& m);
OperatorMatrix load_matrix(const std::string& path);

}  // namespace lbie
