#include "lbie/reference_element.hpp"

#include "node_tables.hpp"

#include <array>
#include <cmath>
#include <mutex>

namespace lbie {

double ReferenceElement::interpolate(const Eigen::Ref<const VectorXd>& samples, double u,
                                     double v) const
{
    return koornwinder(order, u, v).dot(coefficients * samples);
}

namespace {

std::shared_ptr<const ReferenceElement> make(int p, NodeFamily family)
{
    const detail::NodeTable table = detail::node_table(p);
    auto ref = std::make_shared<ReferenceElement>();
    ref->order = p;
    ref->family = family;
    ref->quadrature_degree = table.degree;
    const int np = n_pol(p);
    ref->nodes.resize(2, np);
    for (int i = 0; i < np; ++i) {
        ref->nodes(0, i) = table.uv[2 * i];
        ref->nodes(1, i) = table.uv[2 * i + 1];
    }
    ref->values = koornwinder_matrix(p, ref->nodes);
    ref->coefficients = ref->values.partialPivLu().inverse();

    // w_j = sum_l U(l, j) int K_l; only K_00 = sqrt(2) has a nonzero integral.
    ref->weights = ref->coefficients.row(0).transpose() * (1.0 / std::sqrt(2.0));

    MatrixXd du(np, np), dv(np, np);
    for (int i = 0; i < np; ++i) {
        const KoornwinderJet jet = koornwinder_jet(p, ref->nodes(0, i), ref->nodes(1, i));
        du.row(i) = jet.du.transpose();
        dv.row(i) = jet.dv.transpose();
    }
    ref->diff_u = du * ref->coefficients;
    ref->diff_v = dv * ref->coefficients;
    return ref;
}

}  // namespace

std::shared_ptr<const ReferenceElement> build_reference_element(int p, NodeFamily family)
{
    if (p < 1 || p > kMaxOrder)
        throw ContractError("build_reference_element: unsupported order " + std::to_string(p) +
                            " (supported: 1.." + std::to_string(kMaxOrder) + ")");
    static std::mutex mutex;
    static std::array<std::shared_ptr<const ReferenceElement>, kMaxOrder + 1> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[p];
    if (!slot) slot = make(p, family);
    return slot;
}

}  // namespace lbie
