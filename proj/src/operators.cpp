#include "lbie/operators.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lbie {

const OperatorMatrix& LayerOperators::operator[](KernelKind kind) const
{
    switch (kind) {
    case KernelKind::Single: return single;
    case KernelKind::Double: return double_layer;
    case KernelKind::SinglePrime: return single_prime;
    case KernelKind::DiffSum: return diff_sum;
    }
    throw ContractError("LayerOperators: unknown kernel kind");
}

namespace {

constexpr Index kFarChunk = 256;

// Fills out[k] for every k with want[k]; columns of source triangle t are
// written by exactly one thread.
void assemble_into(const SurfaceMesh& mesh, const QuadConfig& cfg, const std::array<bool, 4>& want,
                   std::array<MatrixXd, 4>& out)
{
    const ReferenceElement& ref = mesh.reference();
    const int np = ref.size();
    const Index n = mesh.n_pts();
    cfg.validate(ref.order);
    for (int k = 0; k < kNumKernels; ++k)
        if (want[k]) out[k].resize(n, n);

    const Matrix3Xd& X = mesh.positions();
    const Matrix3Xd& N = mesh.normals();
    const MatrixXd& U = ref.coefficients;

    std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < mesh.n_tri(); ++t) {
        try {
            TriangleQuadrature tq(mesh.chart(t), ref, cfg, t);
            const Index c0 = mesh.node(t, 0);

            for (int i = 0; i < np; ++i) {
                const Moments m = tq.self(ref.nodes.col(i)) * U;
                for (int k = 0; k < kNumKernels; ++k)
                    if (want[k]) out[k].block(c0 + i, c0, 1, np) = m.row(k);
            }

            std::vector<Index> far;
            far.reserve(n);
            for (Index i = 0; i < n; ++i) {
                if (i >= c0 && i < c0 + np) continue;
                if (tq.classify(X.col(i)) == Regime::Far) {
                    far.push_back(i);
                    continue;
                }
                const Moments m = tq.near({X.col(i), N.col(i)}) * U;
                for (int k = 0; k < kNumKernels; ++k)
                    if (want[k]) out[k].block(i, c0, 1, np) = m.row(k);
            }

            // far rows in chunks: kernel samples times the Lagrange-weighted rule
            const auto& rule = tq.smooth_rule();
            const Index nq = rule.w.size();
            const MatrixXd lagrange = rule.w.asDiagonal() * (rule.basis * U);
            std::array<MatrixXd, 4> kmat;
            for (size_t start = 0; start < far.size(); start += kFarChunk) {
                const Index rows = std::min<Index>(kFarChunk, static_cast<Index>(far.size() - start));
                for (auto& km : kmat) km.resize(rows, nq);
                for (Index r = 0; r < rows; ++r) {
                    const Index i = far[start + r];
                    const Vector3d x = X.col(i), nx = N.col(i);
                    for (Index q = 0; q < nq; ++q) {
                        const auto kv = eval_all_kernels<double>(x, nx, rule.y.col(q), rule.n.col(q));
                        for (int k = 0; k < kNumKernels; ++k) kmat[k](r, q) = kv[k];
                    }
                }
                for (int k = 0; k < kNumKernels; ++k) {
                    if (!want[k]) continue;
                    const MatrixXd block = kmat[k] * lagrange;
                    for (Index r = 0; r < rows; ++r) out[k].block(far[start + r], c0, 1, np) = block.row(r);
                }
            }
        } catch (const std::exception& e) {
#pragma omp critical(lbie_assembly_failure)
            if (failure.empty()) failure = "triangle " + std::to_string(t) + ": " + e.what();
        }
    }
    if (!failure.empty()) throw QuadratureError("assembly failed at " + failure, 0.0, cfg.tol_adaptive);
}

OperatorMatrix wrap(const char* label, MatrixXd m, const SurfaceMesh& mesh)
{
    return {label, std::move(m), mesh.fingerprint()};
}

VectorXd scaled_weights(const SurfaceMesh& mesh, WScaling scaling)
{
    return scaling == WScaling::Mean ? VectorXd(mesh.weights() / mesh.area()) : mesh.weights();
}

void check_same_mesh(const SurfaceMesh& mesh, const LayerOperators& ops)
{
    for (KernelKind k : kAllKernels)
        if (ops[k].fingerprint != mesh.fingerprint() || ops[k].rows() != mesh.n_pts())
            throw ContractError(std::string("operator ") + to_string(k) +
                                " was assembled on a different mesh");
}

}  // namespace

OperatorMatrix assemble(KernelKind kind, const SurfaceMesh& mesh, const QuadConfig& cfg)
{
    std::array<bool, 4> want{};
    want[static_cast<int>(kind)] = true;
    std::array<MatrixXd, 4> out;
    assemble_into(mesh, cfg, want, out);
    return wrap(to_string(kind), std::move(out[static_cast<int>(kind)]), mesh);
}

LayerOperators assemble_layer_operators(const SurfaceMesh& mesh, const QuadConfig& cfg)
{
    std::array<MatrixXd, 4> out;
    assemble_into(mesh, cfg, {true, true, true, true}, out);
    return {wrap("S", std::move(out[0]), mesh), wrap("D", std::move(out[1]), mesh),
            wrap("S'", std::move(out[2]), mesh), wrap("S''+D'", std::move(out[3]), mesh)};
}

OperatorMatrix assemble_W(const SurfaceMesh& mesh)
{
    return wrap("W", VectorXd::Ones(mesh.n_pts()) * mesh.weights().transpose(), mesh);
}

OperatorMatrix compose_system(const SurfaceMesh& mesh, const LayerOperators& ops, WScaling scaling)
{
    check_same_mesh(mesh, ops);
    const MatrixXd& S = ops.single.entries;
    const MatrixXd& D = ops.double_layer.entries;
    const Index n = mesh.n_pts();
    MatrixXd inner = ops.diff_sum.entries;
    inner.noalias() += 2.0 * mesh.curvature().asDiagonal() * ops.single_prime.entries;
    MatrixXd A = -0.25 * MatrixXd::Identity(n, n);
    A.noalias() -= S * inner;
    inner.resize(0, 0);
    A.noalias() += D * D;
    const VectorXd s1 = S.rowwise().sum();
    const VectorXd wS = S.transpose() * scaled_weights(mesh, scaling);
    A.noalias() += s1 * wS.transpose();
    return wrap("A", std::move(A), mesh);
}

OperatorMatrix compose_system(const SurfaceMesh& mesh, const QuadConfig& cfg, WScaling scaling)
{
    return compose_system(mesh, assemble_layer_operators(mesh, cfg), scaling);
}

OperatorMatrix right_precondition_system(const SurfaceMesh& mesh, const LayerOperators& ops,
                                         WScaling scaling)
{
    check_same_mesh(mesh, ops);
    const MatrixXd& S = ops.single.entries;
    const MatrixXd& Sp = ops.single_prime.entries;
    const Index n = mesh.n_pts();
    MatrixXd left = -ops.diff_sum.entries;
    left.noalias() -= 2.0 * mesh.curvature().asDiagonal() * Sp;
    MatrixXd A = -0.25 * MatrixXd::Identity(n, n);
    A.noalias() += Sp * Sp;
    A.noalias() += left * S;
    left.resize(0, 0);
    const VectorXd wSS = S.transpose() * (S.transpose() * scaled_weights(mesh, scaling));
    A.rowwise() += wSS.transpose();
    return wrap("A_right", std::move(A), mesh);
}

OperatorMatrix right_precondition_system(const SurfaceMesh& mesh, const QuadConfig& cfg,
                                         WScaling scaling)
{
    return right_precondition_system(mesh, assemble_layer_operators(mesh, cfg), scaling);
}

SystemOperator::SystemOperator(const SurfaceMesh& mesh, const LayerOperators& ops, Form form,
                               WScaling scaling)
    : ops_(ops), form_(form), n_(mesh.n_pts()), H_(mesh.curvature()), w_(scaled_weights(mesh, scaling))
{
    check_same_mesh(mesh, ops);
    s1_ = ops.single.entries.rowwise().sum();
}

VectorXd SystemOperator::apply_without_W(const VectorXd& x) const
{
    const MatrixXd& S = ops_.single.entries;
    const MatrixXd& D = ops_.double_layer.entries;
    const MatrixXd& Sp = ops_.single_prime.entries;
    const MatrixXd& K = ops_.diff_sum.entries;
    VectorXd y = -0.25 * x;
    if (form_ == Form::Left) {
        const VectorXd inner = 2.0 * H_.cwiseProduct(Sp * x) + K * x;
        y.noalias() -= S * inner;
        const VectorXd dx = D * x;
        y.noalias() += D * dx;
    } else {
        const VectorXd spx = Sp * x;
        y.noalias() += Sp * spx;
        const VectorXd sx = S * x;
        y.noalias() -= K * sx;
        y.noalias() -= 2.0 * H_.cwiseProduct(Sp * sx);
    }
    return y;
}

VectorXd SystemOperator::apply(const VectorXd& x) const
{
    if (x.size() != n_) throw ContractError("SystemOperator: size mismatch");
    VectorXd y = apply_without_W(x);
    const MatrixXd& S = ops_.single.entries;
    if (form_ == Form::Left) {
        y += w_.dot(S * x) * s1_;
    } else {
        const VectorXd sx = S * x;
        y.array() += w_.dot(S * sx);
    }
    return y;
}

double condition_number(const MatrixXd& a)
{
    const Eigen::BDCSVD<MatrixXd> svd(a);
    const VectorXd& s = svd.singularValues();
    return s[0] / s[s.size() - 1];
}

double smallest_singular_value(const MatrixXd& a)
{
    const Eigen::BDCSVD<MatrixXd> svd(a);
    return svd.singularValues().tail(1)[0];
}

void dump_matrix(const std::string& path, const OperatorMatrix& m)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path + ": cannot open for writing");
    const std::uint64_t n = static_cast<std::uint64_t>(m.rows());
    char label[16] = {};
    std::strncpy(label, m.label.c_str(), sizeof label - 1);
    out.write("LBIEMAT1", 8);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(label, sizeof label);
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m.entries;
    out.write(reinterpret_cast<const char*>(rm.data()), static_cast<std::streamsize>(rm.size() * 8));
    if (!out) throw FormatError(path + ": write failed");
}

OperatorMatrix load_matrix(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path + ": cannot open");
    char magic[8];
    std::uint64_t n = 0;
    char label[16];
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    in.read(label, sizeof label);
    if (!in || std::memcmp(magic, "LBIEMAT1", 8) != 0) throw FormatError(path + ": not a matrix dump");
    label[15] = '\0';
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm(n, n);
    in.read(reinterpret_cast<char*>(rm.data()), static_cast<std::streamsize>(rm.size() * 8));
    if (!in) throw FormatError(path + ": truncated matrix data");
    return {label, MatrixXd(rm), 0};
}

}  // namespace lbie
